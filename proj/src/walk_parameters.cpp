#include "invariants/walk_parameters.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace invariants {

namespace {

void check_pair(const char* names, const TwoPhaseSequence& re_seq,
                const TwoPhaseSequence& cx_seq) {
  auto check_site = [&](const char* where, Complex rv, Complex cv) {
    if (std::abs(rv.imag()) > kWalkConstraintTol) {
      std::ostringstream msg;
      msg << names << ": real parameter has imaginary part at " << where;
      throw std::invalid_argument(msg.str());
    }
    const double norm = rv.real() * rv.real() + std::norm(cv);
    if (std::abs(norm - 1.0) > kWalkConstraintTol) {
      std::ostringstream msg;
      msg << names << ": unit-norm constraint violated at " << where
          << " (got " << norm << ")";
      throw std::invalid_argument(msg.str());
    }
  };
  check_site("-inf", re_seq.limit_neg(), cx_seq.limit_neg());
  check_site("+inf", re_seq.limit_pos(), cx_seq.limit_pos());
  for (const auto& [x, v] : re_seq.overrides()) {
    std::ostringstream w;
    w << "x=" << x;
    check_site(w.str().c_str(), v, cx_seq.value(x));
  }
  for (const auto& [x, v] : cx_seq.overrides()) {
    std::ostringstream w;
    w << "x=" << x;
    check_site(w.str().c_str(), re_seq.value(x), v);
  }
}

}  // namespace

void validate(const WalkParameters& params) {
  check_pair("(p, q)", params.p, params.q);
  check_pair("(a, b)", params.a, params.b);
}

double arg_2pi(Complex w) {
  if (w == Complex{}) return 0.0;
  double t = std::arg(w);
  if (t < 0.0) t += 2.0 * std::numbers::pi;
  return t;
}

AsymptoticPhases asymptotic_phases(const WalkParameters& params) {
  AsymptoticPhases phases;
  phases.theta_neg = arg_2pi(params.q_limit(End::neg));
  phases.theta_pos = arg_2pi(params.q_limit(End::pos));
  phases.phi_neg = arg_2pi(params.b_limit(End::neg));
  phases.phi_pos = arg_2pi(params.b_limit(End::pos));
  return phases;
}

}  // namespace invariants
