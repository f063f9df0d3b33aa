#include "invariants/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "invariants/dense.hpp"
#include "invariants/ssqw.hpp"

namespace invariants {

namespace {

struct SvSplit {
  int below = 0;
  double smallest_kept = 0.0;
  double largest_dropped = 0.0;
  bool gap_ok = true;
};

SvSplit split_singular_values(const std::vector<double>& sv, double tol) {
  SvSplit out;
  if (sv.empty() || sv.front() == 0.0) {
    out.below = static_cast<int>(sv.size());
    out.gap_ok = false;
    return out;
  }
  const double cut = tol * sv.front();
  for (double s : sv) {
    if (s < cut) {
      out.below += 1;
      out.largest_dropped = std::max(out.largest_dropped, s);
    } else {
      out.smallest_kept = s;  // descending order: last kept is smallest
    }
  }
  if (out.below > 0)
    out.gap_ok = out.largest_dropped * 10.0 <= out.smallest_kept;
  return out;
}

/// Row window extended by the band radius on the open side so every
/// equation involving the retained columns is present.
Eigen::MatrixXcd extended_half_line(const BandOperator& a, Side side,
                                    Site N) {
  const Site k = a.band_radius();
  if (side == Side::R) return window_matrix(a, 0, N + k, 0, N);
  return window_matrix(a, -N - k, 0, -N, 0);
}

struct LevelEstimate {
  SvSplit ker;
  SvSplit coker;
};

LevelEstimate level_estimate(const BandOperator& a, const BandOperator& astar,
                             Side side, Site N, double tol) {
  return {split_singular_values(
              dense::singular_values(extended_half_line(a, side, N)), tol),
          split_singular_values(
              dense::singular_values(extended_half_line(astar, side, N)),
              tol)};
}

}  // namespace

namespace {

Site override_radius(const BandOperator& a) {
  Site radius = 0;
  for (const auto& [idx, s] : a.coefficients())
    for (const auto& [x, v] : s.overrides())
      radius = std::max(radius, std::abs(x));
  return radius;
}

}  // namespace

KernelEstimate truncated_index(const BandOperator& a, Side side, Site N,
                               double tol) {
  if (N < 8 * std::max<Site>(1, a.band_radius()))
    throw std::invalid_argument(
        "truncation window too small for the band radius");
  if (N <= override_radius(a))
    throw std::invalid_argument(
        "truncation window must clear the override window");
  const BandOperator astar = adjoint(a);
  const LevelEstimate at_n = level_estimate(a, astar, side, N, tol);
  const LevelEstimate at_2n = level_estimate(a, astar, side, 2 * N, tol);

  KernelEstimate out;
  out.N = N;
  out.tol = tol;
  out.dim_ker = at_n.ker.below;
  out.dim_coker = at_n.coker.below;
  out.index = out.dim_ker - out.dim_coker;
  out.smallest_kept_sv =
      std::min(at_n.ker.smallest_kept, at_n.coker.smallest_kept);
  out.largest_dropped_sv =
      std::max(at_n.ker.largest_dropped, at_n.coker.largest_dropped);

  const bool counts_agree = at_n.ker.below == at_2n.ker.below &&
                            at_n.coker.below == at_2n.coker.below;
  const bool gaps_ok = at_n.ker.gap_ok && at_n.coker.gap_ok &&
                       at_2n.ker.gap_ok && at_2n.coker.gap_ok;
  // A smallest kept value still sliding toward zero as the window grows
  // means a kernel vector is hiding just above the threshold.
  auto settled = [](const SvSplit& coarse, const SvSplit& fine) {
    if (coarse.smallest_kept == 0.0) return false;
    return fine.smallest_kept >= 0.75 * coarse.smallest_kept;
  };
  out.stable = counts_agree && gaps_ok && settled(at_n.ker, at_2n.ker) &&
               settled(at_n.coker, at_2n.coker);
  return out;
}

FullLineIndexEstimate truncated_full_line_index(const BandOperator& a, Site N,
                                                double tol) {
  FullLineIndexEstimate out{truncated_index(a, Side::L, N, tol),
                            truncated_index(a, Side::R, N, tol), 0, false};
  out.index = out.left.index + out.right.index;
  out.stable = out.left.stable && out.right.stable;
  return out;
}

TruncatedSpectrum truncated_spectrum(const BandOperator& a, Site N) {
  if (N < 8 * std::max<Site>(1, a.band_radius()))
    throw std::invalid_argument(
        "truncation window too small for the band radius");
  const Eigen::MatrixXcd m = window_matrix(a, -N, N + 1, -N, N + 1);
  TruncatedSpectrum out;
  out.eigenvalues = dense::eigenvalues(m);
  const double scale = std::max(1.0, m.squaredNorm());
  out.normality_caveat =
      ((m * m.adjoint() - m.adjoint() * m).norm() / scale) > 1e-12;
  return out;
}

ZeroModeCount zero_mode_count(const WalkParameters& params,
                              BoundStateSign which, Site N, double tol) {
  validate(params);
  const Complex target = which == BoundStateSign::plus ? 1.0 : -1.0;
  const BandOperator u = build_evolution(params);
  const Eigen::MatrixXcd m = window_matrix(u, -N, N + 1, -N, N + 1);
  const dense::Eigensystem eig = dense::eigensystem(m);

  const int n = u.block_size();
  const Site sites = 2 * N + 1;
  const Site edge = std::min<Site>(8, std::max<Site>(1, N / 4));

  ZeroModeCount out;
  for (Eigen::Index idx = 0; idx < eig.values.size(); ++idx) {
    if (std::abs(eig.values(idx) - target) > tol) continue;
    const auto v = eig.vectors.col(idx);
    double boundary = 0.0;
    const double total = v.squaredNorm();
    for (Site s = 0; s < sites; ++s) {
      const Site x = s - N;
      if (std::abs(x) <= N - edge) continue;
      for (int c = 0; c < n; ++c) boundary += std::norm(v(s * n + c));
    }
    const double ratio = total > 0.0 ? boundary / total : 1.0;
    if (ratio < 1e-6)
      out.count += 1;
    else if (ratio < 1e-2)
      out.ambiguous = true;
  }
  return out;
}

}  // namespace invariants
