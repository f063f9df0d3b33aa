#pragma once

#include "invariants/two_phase.hpp"

namespace invariants {

/// Tolerance for the pointwise unit-norm constraints on walk parameters.
inline constexpr double kWalkConstraintTol = 1e-10;

/// The split-step walk data: real sequences p, a and complex sequences
/// q, b with p(x)^2 + |q(x)|^2 = 1 and a(x)^2 + |b(x)|^2 = 1 at every site.
struct WalkParameters {
  TwoPhaseSequence p;  // real-valued
  TwoPhaseSequence q;
  TwoPhaseSequence a;  // real-valued
  TwoPhaseSequence b;

  double p_limit(End e) const { return p.limit(e).real(); }
  double a_limit(End e) const { return a.limit(e).real(); }
  Complex q_limit(End e) const { return q.limit(e); }
  Complex b_limit(End e) const { return b.limit(e); }
};

/// Throws std::invalid_argument when realness or a unit-norm constraint
/// fails (checked at both limits and at every override site).
void validate(const WalkParameters& params);

/// Asymptotic phases of q and b: arg of the limit when it is nonzero,
/// otherwise 0. Angles normalised to [0, 2*pi).
struct AsymptoticPhases {
  double theta_neg = 0.0, theta_pos = 0.0;
  double phi_neg = 0.0, phi_pos = 0.0;
  double theta(End e) const { return e == End::neg ? theta_neg : theta_pos; }
  double phi(End e) const { return e == End::neg ? phi_neg : phi_pos; }
};
AsymptoticPhases asymptotic_phases(const WalkParameters& params);

/// arg in [0, 2*pi), with arg 0 = 0.
double arg_2pi(Complex w);

}  // namespace invariants
