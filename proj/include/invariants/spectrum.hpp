#pragma once

#include <vector>

#include "invariants/band_operator.hpp"
#include "invariants/walk_parameters.hpp"

namespace invariants {

struct SpectrumSample {
  double t = 0.0;  // angle in [0, 2*pi)
  std::vector<Complex> eigenvalues;
};

/// Sampled essential spectrum: per end, the eigenvalues of the symbol on a
/// uniform angle grid. A plotting aid, not a certified region.
struct SpectrumCloud {
  std::vector<SpectrumSample> neg;
  std::vector<SpectrumSample> pos;

  const std::vector<SpectrumSample>& at(End e) const {
    return e == End::neg ? neg : pos;
  }
};

/// Eigenvalues (with multiplicity) of the symbol evaluated at z on the unit
/// circle: closed-form for n <= 2, characteristic-polynomial companion
/// roots above that. Requires | |z| - 1 | <= 1e-12.
std::vector<Complex> eigenvalues_at(const LaurentMatrixSymbol& s, Complex z);

/// Union over both ends of the per-end symbol eigenvalue clouds on a grid
/// of the given size (at least 16).
SpectrumCloud essential_spectrum(const BandOperator& a, int samples = 1024);

/// Exact membership: lambda is in the essential spectrum iff for some end
/// det(symbol - lambda) has a root on the unit circle (within the circle
/// tolerance), including the degenerate identically-zero determinant.
bool in_essential_spectrum(const BandOperator& a, Complex lambda);

/// One arc set {z on the circle : sign * Re z in [lo, hi]}.
struct CircularBand {
  int sign = 1;  // +1 or -1
  double lo = 0.0;
  double hi = 0.0;

  bool contains_re(double re, double tol = 0.0) const {
    const double v = sign * re;
    return v >= lo - tol && v <= hi + tol;
  }
};

/// Per-end arc description of a walk's essential spectrum on the circle.
struct CircularBandSet {
  CircularBand neg;
  CircularBand pos;

  const CircularBand& at(End e) const { return e == End::neg ? neg : pos; }
  bool contains(Complex z, double tol = 0.0) const {
    return neg.contains_re(z.real(), tol) || pos.contains_re(z.real(), tol);
  }
};

/// Arcs of the evolution operator's essential spectrum: for each end the
/// interval [|pa| - |qb|, |pa| + |qb|] clipped to [-1, 1], carried by the
/// sign of p*a (sign of 0 taken as +1).
CircularBandSet walk_spectrum_bands(const WalkParameters& params);

}  // namespace invariants
