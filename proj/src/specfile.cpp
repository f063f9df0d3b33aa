#include "invariants/specfile.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace invariants {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw SpecError(what); }

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open spec file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad("invalid JSON in " + path + ": " + e.what());
  }
}

void require_format(const json& j) {
  if (!j.is_object()) bad("spec root must be an object");
  if (!j.contains("format") || !j["format"].is_number_integer() ||
      j["format"].get<int>() != 1)
    bad("spec must declare \"format\": 1");
}

Complex parse_complex(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number())
    bad(std::string(what) + " must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

double parse_real(const json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a real number");
  return j.get<double>();
}

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

template <typename ValueParser>
TwoPhaseSequence parse_sequence(const json& j, const char* what,
                                ValueParser parse_value) {
  if (!j.is_object() || !j.contains("limit_neg") || !j.contains("limit_pos"))
    bad(std::string(what) + " must carry limit_neg and limit_pos");
  std::map<Site, Complex> overrides;
  if (j.contains("overrides")) {
    if (!j["overrides"].is_array())
      bad(std::string(what) + ".overrides must be an array");
    for (const auto& entry : j["overrides"]) {
      if (!entry.is_object() || !entry.contains("x") ||
          !entry.contains("value") || !entry["x"].is_number_integer())
        bad(std::string(what) + ".overrides entries need integer x and value");
      overrides[entry["x"].get<Site>()] = parse_value(entry["value"], what);
    }
  }
  return {parse_value(j["limit_neg"], what), parse_value(j["limit_pos"], what),
          std::move(overrides)};
}

json sequence_to_json(const TwoPhaseSequence& s, bool real_valued) {
  json j;
  auto value = [real_valued](Complex c) {
    return real_valued ? json(c.real()) : complex_to_json(c);
  };
  j["limit_neg"] = value(s.limit_neg());
  j["limit_pos"] = value(s.limit_pos());
  json ov = json::array();
  for (const auto& [x, v] : s.overrides())
    ov.push_back({{"x", x}, {"value", value(v)}});
  if (!ov.empty()) j["overrides"] = std::move(ov);
  return j;
}

TwoPhaseSequence parse_complex_sequence(const json& j, const char* what) {
  return parse_sequence(j, what, [](const json& v, const char* w) {
    return parse_complex(v, w);
  });
}

TwoPhaseSequence parse_real_sequence(const json& j, const char* what) {
  return parse_sequence(j, what, [](const json& v, const char* w) {
    return Complex(parse_real(v, w), 0.0);
  });
}

}  // namespace

BandOperator parse_operator_spec(const json& j) {
  require_format(j);
  if (!j.contains("n") || !j.contains("k") || !j.contains("coefficients"))
    bad("operator spec needs n, k, and coefficients");
  if (!j["n"].is_number_integer() || !j["k"].is_number_integer())
    bad("n and k must be integers");
  const int n = j["n"].get<int>();
  const Site k = j["k"].get<Site>();
  if (n <= 0) bad("n must be positive");
  if (k < 0) bad("k must be nonnegative");
  BandOperator a(n, k);
  if (!j["coefficients"].is_array()) bad("coefficients must be an array");
  for (const auto& c : j["coefficients"]) {
    if (!c.is_object() || !c.contains("i") || !c.contains("j") ||
        !c.contains("y"))
      bad("every coefficient needs i, j, y");
    const int i = c["i"].get<int>();
    const int jj = c["j"].get<int>();
    const Site y = c["y"].get<Site>();
    if (i < 1 || i > n || jj < 1 || jj > n)
      bad("coefficient component indices must lie in 1..n");
    if (y < -k || y > k) bad("coefficient offset outside the band");
    a.set_coeff(i - 1, jj - 1, y,
                parse_complex_sequence(c, "coefficient") );
  }
  return a;
}

BandOperator load_operator_spec(const std::string& path) {
  return parse_operator_spec(load_json(path));
}

nlohmann::json operator_spec_to_json(const BandOperator& a) {
  json j;
  j["format"] = 1;
  j["n"] = a.block_size();
  j["k"] = a.band_radius();
  json coeffs = json::array();
  for (const auto& [idx, s] : a.coefficients()) {
    json c = sequence_to_json(s, false);
    c["i"] = idx.i + 1;
    c["j"] = idx.j + 1;
    c["y"] = idx.y;
    coeffs.push_back(std::move(c));
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

WalkParameters parse_walk_spec(const json& j) {
  require_format(j);
  for (const char* key : {"p", "q", "a", "b"})
    if (!j.contains(key)) bad(std::string("walk spec needs ") + key);
  WalkParameters params{parse_real_sequence(j["p"], "p"),
                        parse_complex_sequence(j["q"], "q"),
                        parse_real_sequence(j["a"], "a"),
                        parse_complex_sequence(j["b"], "b")};
  try {
    validate(params);
  } catch (const std::invalid_argument& e) {
    bad(std::string("walk constraints violated: ") + e.what());
  }
  return params;
}

WalkParameters load_walk_spec(const std::string& path) {
  return parse_walk_spec(load_json(path));
}

nlohmann::json walk_spec_to_json(const WalkParameters& params) {
  json j;
  j["format"] = 1;
  j["p"] = sequence_to_json(params.p, true);
  j["q"] = sequence_to_json(params.q, false);
  j["a"] = sequence_to_json(params.a, true);
  j["b"] = sequence_to_json(params.b, false);
  return j;
}

}  // namespace invariants
