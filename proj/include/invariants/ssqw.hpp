#pragma once

#include <optional>
#include <string>

#include "invariants/band_operator.hpp"
#include "invariants/spectrum.hpp"
#include "invariants/walk_parameters.hpp"
#include "invariants/winding.hpp"

namespace invariants {

/// Shift-conjugated coin involution: [[p, qL], [L*q*, -p(.-1)]], an n=2,
/// k=1 unitary involution.
BandOperator build_gamma(const WalkParameters& params);

/// Plain coin involution [[a, b*], [b, -a]], an n=2 multiplication
/// operator.
BandOperator build_gamma_prime(const WalkParameters& params);

/// Evolution operator: compose(build_gamma, build_gamma_prime).
BandOperator build_evolution(const WalkParameters& params);

/// Pointwise phase choices theta(x) = arg q(x) (0 where q vanishes) and
/// phi(x) = arg b(x), as two-phase sequences.
TwoPhaseSequence pointwise_theta(const WalkParameters& params);
TwoPhaseSequence pointwise_phi(const WalkParameters& params);

/// The six scalar blocks of the evolution operator conjugated into the
/// eigenbases of the two involutions: the off-diagonal parts q_eps0/q_gam0
/// carry the index content, the r blocks are the diagonal remainders.
struct ChiralBlocks {
  BandOperator q_eps0;
  BandOperator q_gam0;
  BandOperator r_eps1;
  BandOperator r_eps2;
  BandOperator r_gam1;
  BandOperator r_gam2;
};

/// Requires q(x) = |q(x)| e^{i theta(x)} and b(x) = |b(x)| e^{i phi(x)}
/// wherever q resp. b is nonzero.
ChiralBlocks chiral_blocks(const WalkParameters& params,
                           const TwoPhaseSequence& theta,
                           const TwoPhaseSequence& phi);

/// Unitary diagonalizer of build_gamma: an n=2, k=1 operator eps with
/// eps* Gamma eps = diag(1, -1).
BandOperator gamma_eigenbasis(const WalkParameters& params,
                              const TwoPhaseSequence& theta);

/// Unitary diagonalizer of build_gamma_prime (k = 0).
BandOperator gamma_prime_eigenbasis(const WalkParameters& params,
                                    const TwoPhaseSequence& phi);

/// Endpoint phase corrections making the conjugated off-diagonal blocks
/// two-sided convergent even when q or b vanishes at an end: per site,
/// theta_pm(x) is theta(x) when p at the end governing x equals +-1, else
/// 0; likewise phi_pm with a.
struct PhaseRepair {
  TwoPhaseSequence theta_plus, theta_minus;
  TwoPhaseSequence phi_plus, phi_minus;
};
PhaseRepair phase_repair(const WalkParameters& params);

/// e^{-i theta_+} q_eps0 e^{i theta_-} and e^{i phi_+} q_gam0 e^{-i phi_-}:
/// the repaired scalar blocks whose symbols are the f-polynomials below.
struct RepairedBlocks {
  BandOperator a_eps;
  BandOperator a_gam;
};
RepairedBlocks repaired_blocks(const WalkParameters& params);

/// Degree-support {-1, 0, 1} symbols of the repaired blocks at each end.
struct WalkSymbols {
  LaurentPoly f_eps_neg, f_eps_pos;
  LaurentPoly f_gam_neg, f_gam_pos;

  const LaurentPoly& f_eps(End e) const {
    return e == End::neg ? f_eps_neg : f_eps_pos;
  }
  const LaurentPoly& f_gam(End e) const {
    return e == End::neg ? f_gam_neg : f_gam_pos;
  }
};
WalkSymbols f_symbols(const WalkParameters& params);

/// Closed-form winding of the ellipse traced by
///   2 f(z) = (a1+1) b2 e^{i Theta1} z + (a1-1) b2* e^{-i Theta1} / z
///            - 2 |b1| a2
/// given unit-norm pairs (a1, b1), (a2, b2): nowhere vanishing iff
/// |a1| != |a2|, winding sgn(a1) when |a1| > |a2| and 0 otherwise.
WindingResult ellipse_winding(double a1, Complex b1, double a2, Complex b2,
                              double theta1);

/// Sign convention with sgn(0) = +1.
inline int sgn1(double x) { return x < 0.0 ? -1 : 1; }

/// An integer or half-integer stored exactly as twice its value.
struct HalfInteger {
  int twice = 0;
  bool integral() const { return twice % 2 == 0; }
  int value() const { return twice / 2; }
  double as_double() const { return 0.5 * twice; }
};

/// Which side of the Fredholm dichotomy an end falls on.
enum class EndRegime { p_below_a, p_above_a, degenerate };
std::string to_string(EndRegime r);

struct WittenReport {
  bool fredholm = false;
  EndRegime regime_neg = EndRegime::degenerate;
  EndRegime regime_pos = EndRegime::degenerate;
  /// Index of the q_eps0 block (present when fredholm).
  std::optional<int> ind_gamma_gamma_prime;
  /// Index of the q_gam0 block.
  std::optional<int> ind_gamma_prime_gamma;
  /// (ind_gamma_gamma_prime +- ind_gamma_prime_gamma) / 2; integral
  /// whenever fredholm.
  std::optional<HalfInteger> ind_plus;
  std::optional<HalfInteger> ind_minus;
};

/// Witten indices of the walk, computed along two independent routes (the
/// closed-form case table over the four sign regimes, and windings of the
/// f-symbols) which must agree exactly; DiscrepancyError otherwise. Not
/// Fredholm (|p| = |a| at some end) is reported in-band.
WittenReport witten_indices(const WalkParameters& params);

/// Essential-spectrum arcs of the evolution operator, verified against a
/// sampled eigenvalue cloud of the assembled operator.
CircularBandSet spectrum_U(const WalkParameters& params,
                           int verify_samples = 256);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Essential spectrum of the imaginary part of the evolution operator:
/// symmetric pairs +-[lo, hi] per end, computed three ways (|f_eps| range,
/// |f_gam| range, and the image of the U-arcs under z -> Im z) which must
/// agree within 1e-9.
struct QSpectrum {
  struct PerEnd {
    Interval f_eps;
    Interval f_gam;
    Interval mapped;
  };
  PerEnd neg, pos;
  /// Union over ends of the symmetric pairs, as intervals on the positive
  /// axis mirrored to the negative one.
  std::vector<Interval> positive_part;
  bool contains_zero = false;
};
QSpectrum spectrum_Q(const WalkParameters& params);

}  // namespace invariants
