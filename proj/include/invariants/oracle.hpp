#pragma once

#include "invariants/band_operator.hpp"
#include "invariants/walk_parameters.hpp"

namespace invariants {

/// Default relative singular-value threshold for kernel counting.
inline constexpr double kOracleTol = 1e-8;

/// Numerical kernel/cokernel estimate of a half-line compression from
/// finite truncations. dim_ker counts singular values below
/// tol * max over a truncation whose row window is extended past the column
/// window by the band radius, so no equation is cut and genuine kernel
/// vectors survive truncation up to an exponentially small residual. The
/// estimate is stable when the counts agree between N and 2N, dropped and
/// kept singular values are separated by a factor of 10, and the smallest
/// kept value has stopped drifting downward.
struct KernelEstimate {
  Site N = 0;
  double tol = kOracleTol;
  int dim_ker = 0;
  int dim_coker = 0;
  int index = 0;
  double smallest_kept_sv = 0.0;
  double largest_dropped_sv = 0.0;
  bool stable = false;
};

/// Requires N >= 8 * band radius (and N beyond the override window for the
/// estimate to be meaningful).
KernelEstimate truncated_index(const BandOperator& a, Side side, Site N,
                               double tol = kOracleTol);

/// Full-line index estimate: the sum of the two half-line estimates.
struct FullLineIndexEstimate {
  KernelEstimate left;
  KernelEstimate right;
  int index = 0;
  bool stable = false;
};
FullLineIndexEstimate truncated_full_line_index(const BandOperator& a, Site N,
                                                double tol = kOracleTol);

/// Eigenvalues of the open-boundary window [-N, N]. For non-normal
/// operators these are not certified approximants of the essential
/// spectrum; normality_caveat flags that case.
struct TruncatedSpectrum {
  std::vector<Complex> eigenvalues;
  bool normality_caveat = false;
};
TruncatedSpectrum truncated_spectrum(const BandOperator& a, Site N);

enum class BoundStateSign { plus, minus };

/// Estimate of dim ker(U -+ 1) for the walk's evolution operator: counts
/// eigenvalues of the window-truncated operator within tol of +-1 whose
/// eigenvectors carry essentially no mass near the artificial boundary
/// (relative boundary mass below 1e-6). Candidates with boundary mass in
/// the gray zone up to 1e-2 set the ambiguous flag.
struct ZeroModeCount {
  int count = 0;
  bool ambiguous = false;
};
ZeroModeCount zero_mode_count(const WalkParameters& params,
                              BoundStateSign which, Site N, double tol = 1e-6);

}  // namespace invariants
