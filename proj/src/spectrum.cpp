#include "invariants/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "invariants/parallel.hpp"
#include "invariants/winding.hpp"

namespace invariants {

namespace {

std::vector<Complex> quadratic_eigenvalues(const Eigen::MatrixXcd& m) {
  const Complex tr = m(0, 0) + m(1, 1);
  const Complex dt = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const Complex disc = tr * tr - 4.0 * dt;
  Complex s = std::sqrt(disc);
  // Pick the branch that avoids cancellation in tr + s.
  if (std::real(std::conj(tr) * s) < 0.0) s = -s;
  const Complex l1 = 0.5 * (tr + s);
  const Complex l2 = (std::abs(l1) > 0.0) ? dt / l1 : 0.5 * (tr - s);
  return {l1, l2};
}

// det(m - lambda I) as ascending coefficients in lambda, by cofactor
// expansion over polynomial entries. Exact coefficient extraction; fine for
// the small block sizes in play.
using Poly = std::vector<Complex>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Complex{});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void poly_acc(Poly& a, const Poly& b, Complex scale) {
  if (a.size() < b.size()) a.resize(b.size(), Complex{});
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
}

Poly det_poly(const std::vector<Poly>& m, int n) {
  if (n == 1) return m[0];
  Poly result{Complex{}};
  std::vector<Poly> minor(static_cast<std::size_t>(n - 1) * (n - 1));
  for (int col = 0; col < n; ++col) {
    for (int i = 1; i < n; ++i) {
      int mj = 0;
      for (int j = 0; j < n; ++j) {
        if (j == col) continue;
        minor[static_cast<std::size_t>(i - 1) * (n - 1) + mj] =
            m[static_cast<std::size_t>(i) * n + j];
        ++mj;
      }
    }
    const Poly term = poly_mul(m[static_cast<std::size_t>(col)],
                               det_poly(minor, n - 1));
    poly_acc(result, term, (col % 2 == 0) ? Complex{1.0} : Complex{-1.0});
  }
  return result;
}

std::vector<Complex> charpoly_eigenvalues(const Eigen::MatrixXcd& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<Poly> entries(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly e{m(i, j)};
      if (i == j) e.push_back(Complex{-1.0});
      entries[static_cast<std::size_t>(i) * n + j] = std::move(e);
    }
  Poly cp = det_poly(entries, n);
  while (cp.size() > 1 && cp.back() == Complex{}) cp.pop_back();
  return polynomial_roots(cp);
}

}  // namespace

std::vector<Complex> eigenvalues_at(const LaurentMatrixSymbol& s, Complex z) {
  if (std::abs(std::abs(z) - 1.0) > 1e-12)
    throw std::invalid_argument("evaluation point must lie on the circle");
  const Eigen::MatrixXcd m = s.eval(z);
  if (s.size() == 1) return {m(0, 0)};
  if (s.size() == 2) return quadratic_eigenvalues(m);
  return charpoly_eigenvalues(m);
}

SpectrumCloud essential_spectrum(const BandOperator& a, int samples) {
  if (samples < 16) throw std::invalid_argument("need at least 16 samples");
  SpectrumCloud cloud;
  for (End end : {End::neg, End::pos}) {
    const LaurentMatrixSymbol s = symbol_at(a, end);
    auto& slot = end == End::neg ? cloud.neg : cloud.pos;
    slot.resize(static_cast<std::size_t>(samples));
    parallel_for(static_cast<std::size_t>(samples), [&](std::size_t j) {
      const double t = 2.0 * std::numbers::pi * static_cast<double>(j) /
                       static_cast<double>(samples);
      slot[j].t = t;
      slot[j].eigenvalues = eigenvalues_at(s, std::polar(1.0, t));
    });
  }
  return cloud;
}

bool in_essential_spectrum(const BandOperator& a, Complex lambda) {
  for (End end : {End::neg, End::pos}) {
    const LaurentPoly d = det(symbol_at(a, end).shifted_by(lambda));
    if (d.is_zero()) return true;
    if (unit_circle_root_distance(d) < kCircleDistanceTol) return true;
  }
  return false;
}

namespace {

int sgn_plus_at_zero(double x) { return x < 0.0 ? -1 : 1; }

CircularBand band_for_end(const WalkParameters& params, End end) {
  const double pa = params.p_limit(end) * params.a_limit(end);
  const double qb =
      std::abs(params.q_limit(end)) * std::abs(params.b_limit(end));
  CircularBand band;
  band.sign = sgn_plus_at_zero(pa);
  band.lo = std::max(std::abs(pa) - qb, -1.0);
  band.hi = std::min(std::abs(pa) + qb, 1.0);
  return band;
}

}  // namespace

CircularBandSet walk_spectrum_bands(const WalkParameters& params) {
  validate(params);
  return {band_for_end(params, End::neg), band_for_end(params, End::pos)};
}

}  // namespace invariants
