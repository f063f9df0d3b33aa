#pragma once

#include <optional>
#include <vector>

#include "invariants/laurent.hpp"

namespace invariants {

/// Roots whose modulus is within this distance of 1 count as lying on the
/// unit circle.
inline constexpr double kCircleDistanceTol = 1e-9;
/// Sampled-minimum ratio below which a symbol is treated as vanishing
/// somewhere on the circle.
inline constexpr double kVanishingRatio = 1e-8;
/// The accumulated phase around a closed loop must land this close to an
/// integer multiple of 2*pi.
inline constexpr double kUnwrapResidualTol = 1e-6;
/// Hard cap on adaptive refinement of the unwrap grid.
inline constexpr std::size_t kMaxUnwrapSamples = std::size_t{1} << 20;

struct WindingResult {
  bool nowhere_vanishing = false;
  /// Present exactly when nowhere_vanishing.
  std::optional<int> winding;
  /// Smallest sampled |p(z)| on the circle, as a diagnostic.
  double min_modulus = 0.0;
  /// False when the two winding algorithms were both consulted and did not
  /// coincide (or one could not conclude).
  bool method_agreement = true;
};

/// Winding number by adaptive phase unwrapping on the unit circle. Refines
/// a uniform grid until consecutive phase steps stay below pi/2; throws
/// IndeterminateWindingError past the sample cap.
WindingResult winding_unwrap(const LaurentPoly& p);

/// Winding number by the argument principle: all roots of z^M p(z) via
/// companion-matrix eigenvalues, winding = (#roots inside the open disk)
/// - M with M the pole order. Throws std::invalid_argument on the zero
/// polynomial.
WindingResult winding_roots(const LaurentPoly& p);

/// Runs both algorithms, records their agreement, and returns the
/// root-based answer. Throws DiscrepancyError when both conclude
/// nowhere-vanishing yet disagree on the integer.
WindingResult winding(const LaurentPoly& p);

/// Roots of c_0 + c_1 z + ... + c_D z^D (ascending, c_D != 0) via a
/// balanced companion matrix.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

/// Smallest | |root| - 1 | over the roots of z^M p(z); +infinity when there
/// are no roots. Requires p nonzero.
double unit_circle_root_distance(const LaurentPoly& p);

/// min/max of |p(z)| over a uniform grid of the given size.
std::pair<double, double> modulus_range_on_circle(const LaurentPoly& p,
                                                  std::size_t samples = 256);

}  // namespace invariants
