#include "invariants/winding.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "invariants/errors.hpp"
#include "invariants/kernels.hpp"

namespace invariants {

namespace {

using std::numbers::pi;

struct DenseCoeffs {
  std::vector<double> re, im;
  long deg_min = 0;
};

DenseCoeffs dense_coeffs(const LaurentPoly& p) {
  DenseCoeffs d;
  d.deg_min = p.deg_min();
  const std::size_t span = static_cast<std::size_t>(p.deg_max() - d.deg_min) + 1;
  d.re.assign(span, 0.0);
  d.im.assign(span, 0.0);
  for (const auto& [m, c] : p.coeffs()) {
    d.re[static_cast<std::size_t>(m - d.deg_min)] = c.real();
    d.im[static_cast<std::size_t>(m - d.deg_min)] = c.imag();
  }
  return d;
}

std::vector<double> uniform_angles(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t j = 0; j < n; ++j)
    t[j] = 2.0 * pi * static_cast<double>(j) / static_cast<double>(n);
  return t;
}

// Parlett-Reinsch balancing, diagonal included; power-of-two scalings only,
// so no rounding is introduced.
void balance(Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.rows();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double row_norm = m.row(i).cwiseAbs().sum();
      const double col_norm = m.col(i).cwiseAbs().sum();
      if (row_norm == 0.0 || col_norm == 0.0) continue;
      int exponent = 0;
      std::frexp(row_norm / col_norm, &exponent);
      exponent /= 2;
      if (exponent == 0) continue;
      const double scaled_col = std::ldexp(col_norm, exponent);
      const double scaled_row = std::ldexp(row_norm, -exponent);
      if (scaled_col + scaled_row < 0.9 * (col_norm + row_norm)) {
        changed = true;
        m.row(i) *= std::ldexp(1.0, -exponent);
        m.col(i) *= std::ldexp(1.0, exponent);
      }
    }
  }
}

// Ordinary-polynomial coefficients of z^M p(z), ascending, with M the pole
// order max(0, -deg_min).
std::vector<Complex> lifted_coeffs(const LaurentPoly& p, long* pole_order) {
  const long M = std::max(0L, -p.deg_min());
  *pole_order = M;
  std::vector<Complex> c(static_cast<std::size_t>(p.deg_max() + M) + 1,
                         Complex{});
  for (const auto& [m, v] : p.coeffs()) c[static_cast<std::size_t>(m + M)] = v;
  return c;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  if (coeffs.empty() || coeffs.back() == Complex{})
    throw std::invalid_argument("leading coefficient must be nonzero");
  const Eigen::Index degree = static_cast<Eigen::Index>(coeffs.size()) - 1;
  if (degree == 0) return {};
  const Complex lead = coeffs.back();
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  for (Eigen::Index i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < degree; ++i)
    companion(i, degree - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;
  balance(companion);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("companion eigenvalue iteration failed");
  std::vector<Complex> roots(static_cast<std::size_t>(degree));
  for (Eigen::Index i = 0; i < degree; ++i)
    roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return roots;
}

std::pair<double, double> modulus_range_on_circle(const LaurentPoly& p,
                                                  std::size_t samples) {
  if (p.is_zero()) return {0.0, 0.0};
  const DenseCoeffs d = dense_coeffs(p);
  const std::vector<double> t = uniform_angles(samples);
  std::vector<double> re(samples), im(samples);
  kernels::eval_on_circle(d.re.data(), d.im.data(), d.re.size(), d.deg_min,
                          t.data(), samples, re.data(), im.data());
  double lo2 = 0.0, hi2 = 0.0;
  kernels::min_max_abs2(re.data(), im.data(), samples, &lo2, &hi2);
  return {std::sqrt(lo2), std::sqrt(hi2)};
}

WindingResult winding_unwrap(const LaurentPoly& p) {
  WindingResult out;
  if (p.is_zero()) return out;
  const DenseCoeffs d = dense_coeffs(p);
  const long span = p.deg_max() - p.deg_min();

  std::size_t n = 64;
  while (n < static_cast<std::size_t>(8 * (span + 1))) n *= 2;

  std::vector<double> t, re, im;
  for (; n <= kMaxUnwrapSamples; n *= 2) {
    t = uniform_angles(n);
    re.resize(n);
    im.resize(n);
    kernels::eval_on_circle(d.re.data(), d.im.data(), d.re.size(), d.deg_min,
                            t.data(), n, re.data(), im.data());

    double lo2 = 0.0, hi2 = 0.0;
    kernels::min_max_abs2(re.data(), im.data(), n, &lo2, &hi2);
    out.min_modulus = std::sqrt(lo2);
    if (lo2 == 0.0) return out;  // exact zero sample: vanishing on the circle

    double total = 0.0;
    bool steps_ok = true;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t jn = (j + 1) % n;
      // arg of w_{j+1} / w_j without the division
      const double cr = re[jn] * re[j] + im[jn] * im[j];
      const double ci = im[jn] * re[j] - re[jn] * im[j];
      const double step = std::atan2(ci, cr);
      if (std::abs(step) >= pi / 2) {
        steps_ok = false;
        break;
      }
      total += step;
    }
    if (!steps_ok) continue;

    const double turns = total / (2.0 * pi);
    const int w = static_cast<int>(std::lround(turns));
    if (std::abs(total - 2.0 * pi * w) > kUnwrapResidualTol) continue;

    out.nowhere_vanishing = out.min_modulus > kVanishingRatio * std::sqrt(hi2);
    if (out.nowhere_vanishing) out.winding = w;
    return out;
  }
  std::ostringstream msg;
  msg << "indeterminate winding: phase unwrap did not settle within "
      << kMaxUnwrapSamples << " samples (min sampled modulus "
      << out.min_modulus << "); the symbol is at or near zero on the circle";
  throw IndeterminateWindingError(msg.str());
}

WindingResult winding_roots(const LaurentPoly& p) {
  if (p.is_zero())
    throw std::invalid_argument("winding of the zero polynomial");
  long pole_order = 0;
  const std::vector<Complex> coeffs = lifted_coeffs(p, &pole_order);
  const std::vector<Complex> roots = polynomial_roots(coeffs);

  WindingResult out;
  out.min_modulus = modulus_range_on_circle(p).first;
  long inside = 0;
  bool on_circle = false;
  for (Complex r : roots) {
    const double dist = std::abs(std::abs(r) - 1.0);
    if (dist < kCircleDistanceTol)
      on_circle = true;
    else if (std::abs(r) < 1.0)
      ++inside;
  }
  out.nowhere_vanishing = !on_circle;
  if (out.nowhere_vanishing)
    out.winding = static_cast<int>(inside - pole_order);
  return out;
}

double unit_circle_root_distance(const LaurentPoly& p) {
  if (p.is_zero())
    throw std::invalid_argument("root distance of the zero polynomial");
  long pole_order = 0;
  const std::vector<Complex> roots =
      polynomial_roots(lifted_coeffs(p, &pole_order));
  double best = std::numeric_limits<double>::infinity();
  for (Complex r : roots) best = std::min(best, std::abs(std::abs(r) - 1.0));
  return best;
}

WindingResult winding(const LaurentPoly& p) {
  WindingResult by_roots = winding_roots(p);
  bool unwrap_concluded = true;
  WindingResult by_unwrap;
  try {
    by_unwrap = winding_unwrap(p);
  } catch (const IndeterminateWindingError&) {
    unwrap_concluded = false;
  }

  if (!unwrap_concluded) {
    by_roots.method_agreement = false;
    return by_roots;
  }
  by_roots.min_modulus = std::min(by_roots.min_modulus, by_unwrap.min_modulus);
  if (by_roots.nowhere_vanishing && by_unwrap.nowhere_vanishing &&
      *by_roots.winding != *by_unwrap.winding) {
    std::ostringstream msg;
    msg << "winding discrepancy: roots give " << *by_roots.winding
        << ", phase unwrap gives " << *by_unwrap.winding
        << " (min sampled modulus " << by_roots.min_modulus << ")";
    throw DiscrepancyError(msg.str());
  }
  by_roots.method_agreement =
      by_roots.nowhere_vanishing == by_unwrap.nowhere_vanishing;
  return by_roots;
}

}  // namespace invariants
