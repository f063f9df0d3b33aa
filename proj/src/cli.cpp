#include "invariants/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <ostream>
#include <string>

#include "invariants/errors.hpp"
#include "invariants/fredholm.hpp"
#include "invariants/oracle.hpp"
#include "invariants/specfile.hpp"
#include "invariants/spectrum.hpp"
#include "invariants/ssqw.hpp"
#include "invariants/winding.hpp"

namespace invariants::cli {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json tolerances_json() {
  return {{"circle_distance", kCircleDistanceTol},
          {"vanishing_ratio", kVanishingRatio},
          {"unwrap_residual", kUnwrapResidualTol}};
}

json optional_int(const std::optional<int>& v) {
  return v ? json(*v) : json(nullptr);
}

struct OutputTarget {
  std::ostream& fallback;
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      fallback << text;
      return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw SpecError("cannot write output file: " + path);
    f << text;
  }
};

// ---- index ----

int run_index(const std::string& spec_path, bool as_json, std::ostream& out) {
  const BandOperator a = load_operator_spec(spec_path);
  const IndexReport r = fredholm_index(a);
  if (as_json) {
    json j{{"fredholm", r.fredholm},
           {"wn_neg", optional_int(r.wn_neg)},
           {"wn_pos", optional_int(r.wn_pos)},
           {"index", optional_int(r.index)},
           {"min_modulus", {{"neg", r.min_modulus_neg},
                            {"pos", r.min_modulus_pos}}},
           {"method_agreement", r.method_agreement},
           {"tolerances", tolerances_json()}};
    out << j.dump(2) << "\n";
  } else {
    out << "fredholm: " << (r.fredholm ? "yes" : "no") << "\n";
    if (r.wn_neg) out << "winding at -inf: " << *r.wn_neg << "\n";
    if (r.wn_pos) out << "winding at +inf: " << *r.wn_pos << "\n";
    if (r.index) out << "index: " << *r.index << "\n";
    out << "min |det symbol|: " << fmt17(r.min_modulus_neg) << " (-inf), "
        << fmt17(r.min_modulus_pos) << " (+inf)\n"
        << "winding methods agree: " << (r.method_agreement ? "yes" : "no")
        << "\n";
  }
  return 0;
}

// ---- spectrum ----

std::string cloud_csv(const SpectrumCloud& cloud) {
  std::string text = "end,t,re,im\n";
  for (End end : {End::neg, End::pos}) {
    const char* tag = end == End::neg ? "neg" : "pos";
    for (const SpectrumSample& s : cloud.at(end))
      for (Complex ev : s.eigenvalues) {
        text += tag;
        text += ',';
        text += fmt17(s.t);
        text += ',';
        text += fmt17(ev.real());
        text += ',';
        text += fmt17(ev.imag());
        text += '\n';
      }
  }
  return text;
}

json cloud_json(const SpectrumCloud& cloud) {
  json rows = json::array();
  for (End end : {End::neg, End::pos}) {
    const char* tag = end == End::neg ? "neg" : "pos";
    for (const SpectrumSample& s : cloud.at(end))
      for (Complex ev : s.eigenvalues)
        rows.push_back({{"end", tag},
                        {"t", s.t},
                        {"re", ev.real()},
                        {"im", ev.imag()}});
  }
  return rows;
}

int run_spectrum(const std::string& spec_path, int samples, bool as_json,
                 const OutputTarget& target) {
  const BandOperator a = load_operator_spec(spec_path);
  const SpectrumCloud cloud = essential_spectrum(a, samples);
  if (as_json) {
    json j{{"samples", samples}, {"cloud", cloud_json(cloud)}};
    target.write(j.dump(2) + "\n");
  } else {
    target.write(cloud_csv(cloud));
  }
  return 0;
}

// ---- verify ----

json kernel_estimate_json(const KernelEstimate& e) {
  return {{"N", e.N},
          {"tol", e.tol},
          {"dim_ker", e.dim_ker},
          {"dim_coker", e.dim_coker},
          {"index", e.index},
          {"smallest_kept_sv", e.smallest_kept_sv},
          {"largest_dropped_sv", e.largest_dropped_sv},
          {"stable", e.stable}};
}

int run_verify(const std::string& spec_path, Site trunc, double tol,
               bool as_json, std::ostream& out) {
  const BandOperator a = load_operator_spec(spec_path);
  const IndexReport winding_report = fredholm_index(a);
  const FullLineIndexEstimate oracle =
      truncated_full_line_index(a, trunc, tol);

  const bool conclusive = winding_report.fredholm && oracle.stable;
  const bool agree =
      conclusive && *winding_report.index == oracle.index;

  if (as_json) {
    json j{{"fredholm", winding_report.fredholm},
           {"winding_index", optional_int(winding_report.index)},
           {"oracle_index", oracle.index},
           {"oracle", {{"left", kernel_estimate_json(oracle.left)},
                       {"right", kernel_estimate_json(oracle.right)}}},
           {"stable", oracle.stable},
           {"agree", conclusive ? json(agree) : json("inconclusive")},
           {"trunc", trunc},
           {"tol", tol},
           {"tolerances", tolerances_json()}};
    out << j.dump(2) << "\n";
  } else {
    out << "fredholm: " << (winding_report.fredholm ? "yes" : "no") << "\n";
    if (winding_report.index)
      out << "winding index: " << *winding_report.index << "\n";
    out << "oracle index: " << oracle.index
        << " (stable: " << (oracle.stable ? "yes" : "no") << ")\n"
        << "agree: "
        << (conclusive ? (agree ? "yes" : "NO") : "inconclusive") << "\n";
  }
  return conclusive && !agree ? 3 : 0;
}

// ---- walk ----

json witten_json(const WittenReport& r) {
  json j{{"fredholm", r.fredholm},
         {"regime_neg", to_string(r.regime_neg)},
         {"regime_pos", to_string(r.regime_pos)},
         {"ind_gamma_gamma_prime", optional_int(r.ind_gamma_gamma_prime)},
         {"ind_gamma_prime_gamma", optional_int(r.ind_gamma_prime_gamma)}};
  j["ind_plus"] = r.ind_plus ? json(r.ind_plus->value()) : json(nullptr);
  j["ind_minus"] = r.ind_minus ? json(r.ind_minus->value()) : json(nullptr);
  return j;
}

int run_walk_index(const std::string& path, bool as_json, std::ostream& out) {
  const WalkParameters params = load_walk_spec(path);
  const WittenReport r = witten_indices(params);
  if (as_json) {
    json j = witten_json(r);
    j["tolerances"] = tolerances_json();
    out << j.dump(2) << "\n";
  } else {
    out << "fredholm: " << (r.fredholm ? "yes" : "no") << "\n"
        << "regime at -inf: " << to_string(r.regime_neg) << "\n"
        << "regime at +inf: " << to_string(r.regime_pos) << "\n";
    if (r.fredholm)
      out << "ind(Gamma, Gamma'): " << *r.ind_gamma_gamma_prime << "\n"
          << "ind(Gamma', Gamma): " << *r.ind_gamma_prime_gamma << "\n"
          << "ind_plus: " << r.ind_plus->value() << "\n"
          << "ind_minus: " << r.ind_minus->value() << "\n";
  }
  return 0;
}

json band_json(const CircularBand& b) {
  return {{"sign", b.sign}, {"lo", b.lo}, {"hi", b.hi}};
}

int run_walk_spectrum(const std::string& path, int samples, bool as_json,
                      const OutputTarget& target) {
  const WalkParameters params = load_walk_spec(path);
  const CircularBandSet bands = spectrum_U(params);
  const SpectrumCloud cloud =
      essential_spectrum(build_evolution(params), samples);
  if (as_json) {
    json j{{"bands", {{"neg", band_json(bands.neg)},
                      {"pos", band_json(bands.pos)}}},
           {"samples", samples},
           {"cloud", cloud_json(cloud)}};
    target.write(j.dump(2) + "\n");
  } else {
    std::string text;
    for (End end : {End::neg, End::pos}) {
      const CircularBand& b = end == End::neg ? bands.neg : bands.pos;
      text += end == End::neg ? "band at -inf: " : "band at +inf: ";
      text += "sign ";
      text += b.sign > 0 ? "+1" : "-1";
      text += ", interval [" + fmt17(b.lo) + ", " + fmt17(b.hi) + "]\n";
    }
    text += cloud_csv(cloud);
    target.write(text);
  }
  return 0;
}

struct Assertion {
  std::string name;
  bool pass = false;
  std::string detail;
};

int run_walk_verify(const std::string& path, Site trunc, double tol,
                    int samples, bool as_json, std::ostream& out) {
  const WalkParameters params = load_walk_spec(path);
  std::vector<Assertion> checks;
  auto record = [&checks](const std::string& name, bool pass,
                          std::string detail = "") {
    checks.push_back({name, pass, std::move(detail)});
  };

  const Site w = 24;
  const BandOperator gamma = build_gamma(params);
  const BandOperator gamma_prime = build_gamma_prime(params);
  const BandOperator u = build_evolution(params);
  const BandOperator id2 = BandOperator::identity(2);

  record("gamma involution",
         max_coeff_difference(compose(gamma, gamma), id2, -w, w) < 1e-12);
  record("gamma self-adjoint",
         max_coeff_difference(adjoint(gamma), gamma, -w, w) < 1e-12);
  record("gamma' involution",
         max_coeff_difference(compose(gamma_prime, gamma_prime), id2, -w, w) <
             1e-12);
  record("gamma' self-adjoint",
         max_coeff_difference(adjoint(gamma_prime), gamma_prime, -w, w) <
             1e-12);
  record("evolution unitary",
         max_coeff_difference(compose(u, adjoint(u)), id2, -w, w) < 1e-12);
  record("chiral symmetry",
         max_coeff_difference(compose(gamma, compose(u, gamma)), adjoint(u),
                              -w, w) < 1e-12 &&
             max_coeff_difference(
                 compose(gamma_prime, compose(u, gamma_prime)), adjoint(u),
                 -w, w) < 1e-12);

  // Conjugating into the involutions' eigenbases must reproduce the six
  // assembled blocks.
  {
    const TwoPhaseSequence theta = pointwise_theta(params);
    const TwoPhaseSequence phi = pointwise_phi(params);
    const ChiralBlocks blocks = chiral_blocks(params, theta, phi);
    const BandOperator eps = gamma_eigenbasis(params, theta);
    const BandOperator gam = gamma_prime_eigenbasis(params, phi);
    const Complex i_unit{0.0, 1.0};
    const BandOperator assembled_eps = BandOperator::from_blocks(
        blocks.r_eps1, scale(adjoint(blocks.q_eps0), i_unit),
        scale(blocks.q_eps0, i_unit), blocks.r_eps2);
    const BandOperator assembled_gam = BandOperator::from_blocks(
        blocks.r_gam1, scale(adjoint(blocks.q_gam0), i_unit),
        scale(blocks.q_gam0, i_unit), blocks.r_gam2);
    record("eigenbasis block decomposition",
           max_coeff_difference(compose(adjoint(eps), compose(u, eps)),
                                assembled_eps, -w, w) < 1e-12 &&
               max_coeff_difference(compose(adjoint(gam), compose(u, gam)),
                                    assembled_gam, -w, w) < 1e-12);
  }

  WittenReport witten;
  bool witten_ok = true;
  try {
    witten = witten_indices(params);
    record("index case table vs symbol windings", true);
  } catch (const DiscrepancyError& e) {
    witten_ok = false;
    record("index case table vs symbol windings", false, e.what());
  }

  if (witten_ok && witten.fredholm) {
    const RepairedBlocks rb = repaired_blocks(params);
    const FullLineIndexEstimate eps_est =
        truncated_full_line_index(rb.a_eps, trunc, tol);
    const FullLineIndexEstimate gam_est =
        truncated_full_line_index(rb.a_gam, trunc, tol);
    record("oracle index of repaired blocks",
           eps_est.stable && gam_est.stable &&
               eps_est.index == *witten.ind_gamma_gamma_prime &&
               gam_est.index == *witten.ind_gamma_prime_gamma,
           "eps " + std::to_string(eps_est.index) + ", gam " +
               std::to_string(gam_est.index));

    const Site zn = std::max<Site>(trunc, 60);
    const ZeroModeCount plus =
        zero_mode_count(params, BoundStateSign::plus, zn);
    const ZeroModeCount minus =
        zero_mode_count(params, BoundStateSign::minus, zn);
    record("bound states at +1 >= |ind_plus|",
           plus.count >= std::abs(witten.ind_plus->value()),
           std::to_string(plus.count) + " >= " +
               std::to_string(std::abs(witten.ind_plus->value())));
    record("bound states at -1 >= |ind_minus|",
           minus.count >= std::abs(witten.ind_minus->value()),
           std::to_string(minus.count) + " >= " +
               std::to_string(std::abs(witten.ind_minus->value())));
  }

  try {
    spectrum_U(params, samples);
    record("evolution spectrum inside arc bands", true);
  } catch (const DiscrepancyError& e) {
    record("evolution spectrum inside arc bands", false, e.what());
  }

  try {
    const QSpectrum q = spectrum_Q(params);
    record("imaginary-part spectrum routes agree", true);
    record("zero in Q-spectrum iff not Fredholm",
           q.contains_zero == !(witten_ok && witten.fredholm));
  } catch (const DiscrepancyError& e) {
    record("imaginary-part spectrum routes agree", false, e.what());
  }

  bool all_pass = true;
  for (const Assertion& a : checks) all_pass = all_pass && a.pass;

  if (as_json) {
    json rows = json::array();
    for (const Assertion& a : checks)
      rows.push_back(
          {{"name", a.name}, {"pass", a.pass}, {"detail", a.detail}});
    json j{{"assertions", rows},
           {"all_pass", all_pass},
           {"trunc", trunc},
           {"tol", tol},
           {"samples", samples},
           {"tolerances", tolerances_json()}};
    out << j.dump(2) << "\n";
  } else {
    for (const Assertion& a : checks) {
      out << (a.pass ? "[PASS] " : "[FAIL] ") << a.name;
      if (!a.detail.empty()) out << " (" << a.detail << ")";
      out << "\n";
    }
  }
  return all_pass ? 0 : 3;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Topological invariants of banded two-phase lattice operators: "
      "Fredholm index and essential spectrum, with brute-force verification"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string out_path;
  int samples = 1024;
  Site trunc = 64;
  double tol = kOracleTol;
  bool want_json = false;
  bool want_text = false;

  auto add_format_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--json", want_json, "emit JSON");
    cmd->add_flag("--text", want_text, "emit human-readable text");
  };

  CLI::App* cmd_index = app.add_subcommand(
      "index", "Fredholm test and index from the asymptotic symbols");
  cmd_index->add_option("spec", spec_path, "operator spec file")->required();
  add_format_flags(cmd_index);

  CLI::App* cmd_spectrum = app.add_subcommand(
      "spectrum", "sampled essential-spectrum cloud (CSV by default)");
  cmd_spectrum->add_option("spec", spec_path, "operator spec file")
      ->required();
  cmd_spectrum->add_option("--samples", samples, "grid size (default 1024)");
  cmd_spectrum->add_option("--out", out_path, "output file (default stdout)");
  add_format_flags(cmd_spectrum);

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "compare the winding index against truncated kernels");
  cmd_verify->add_option("spec", spec_path, "operator spec file")->required();
  cmd_verify->add_option("--trunc", trunc, "truncation length (default 64)");
  cmd_verify->add_option("--tol", tol,
                         "relative singular-value threshold (default 1e-8)");
  add_format_flags(cmd_verify);

  CLI::App* cmd_walk =
      app.add_subcommand("walk", "split-step quantum walk commands");
  cmd_walk->require_subcommand(1);

  CLI::App* walk_index =
      cmd_walk->add_subcommand("index", "Witten indices of the walk");
  walk_index->add_option("spec", spec_path, "walk spec file")->required();
  add_format_flags(walk_index);

  CLI::App* walk_spectrum = cmd_walk->add_subcommand(
      "spectrum", "arc bands plus sampled cloud of the evolution operator");
  walk_spectrum->add_option("spec", spec_path, "walk spec file")->required();
  walk_spectrum->add_option("--samples", samples,
                            "grid size (default 1024)");
  walk_spectrum->add_option("--out", out_path,
                            "output file (default stdout)");
  add_format_flags(walk_spectrum);

  CLI::App* walk_verify = cmd_walk->add_subcommand(
      "verify", "closed form vs winding engine vs truncation oracle");
  walk_verify->add_option("spec", spec_path, "walk spec file")->required();
  walk_verify->add_option("--trunc", trunc, "truncation length (default 64)");
  walk_verify->add_option("--tol", tol,
                          "relative singular-value threshold (default 1e-8)");
  walk_verify->add_option("--samples", samples,
                          "spectrum grid size (default 1024)");
  add_format_flags(walk_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    const OutputTarget target{out, out_path};
    if (cmd_index->parsed()) return run_index(spec_path, want_json, out);
    if (cmd_spectrum->parsed())
      return run_spectrum(spec_path, samples, want_json, target);
    if (cmd_verify->parsed())
      return run_verify(spec_path, trunc, tol, want_json, out);
    if (walk_index->parsed()) return run_walk_index(spec_path, want_json, out);
    if (walk_spectrum->parsed())
      return run_walk_spectrum(spec_path, samples, want_json, target);
    if (walk_verify->parsed())
      return run_walk_verify(spec_path, trunc, tol, samples, want_json, out);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DiscrepancyError& e) {
    err << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  err << "no subcommand selected\n";
  return 2;
}

}  // namespace invariants::cli
