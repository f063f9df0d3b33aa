#include "invariants/band_operator.hpp"

#include <cmath>
#include <stdexcept>

namespace invariants {

Complex FiniteVector::get(int component, Site x) const {
  auto it = entries_.find({component, x});
  return it == entries_.end() ? Complex{} : it->second;
}

void FiniteVector::set(int component, Site x, Complex v) {
  if (component < 0 || component >= n_)
    throw std::invalid_argument("component index out of range");
  if (v == Complex{})
    entries_.erase({component, x});
  else
    entries_[{component, x}] = v;
}

void FiniteVector::add(int component, Site x, Complex v) {
  set(component, x, get(component, x) + v);
}

Complex FiniteVector::inner(const FiniteVector& other) const {
  Complex s{};
  for (const auto& [key, v] : entries_) {
    auto it = other.entries_.find(key);
    if (it != other.entries_.end()) s += std::conj(v) * it->second;
  }
  return s;
}

double FiniteVector::norm() const {
  double s = 0.0;
  for (const auto& [key, v] : entries_) s += std::norm(v);
  return std::sqrt(s);
}

BandOperator::BandOperator(int n, Site k) : n_(n), k_(k) {
  if (n <= 0) throw std::invalid_argument("block size must be positive");
  if (k < 0) throw std::invalid_argument("band radius must be nonnegative");
}

const TwoPhaseSequence& BandOperator::coeff(int i, int j, Site y) const {
  static const TwoPhaseSequence zero;
  auto it = coeff_.find({i, j, y});
  return it == coeff_.end() ? zero : it->second;
}

void BandOperator::set_coeff(int i, int j, Site y, TwoPhaseSequence s) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw std::invalid_argument("component index out of range");
  if (y < -k_ || y > k_)
    throw std::invalid_argument("offset outside the band");
  if (s.is_zero())
    coeff_.erase({i, j, y});
  else
    coeff_[{i, j, y}] = std::move(s);
}

BandOperator BandOperator::identity(int n) {
  BandOperator a(n, 0);
  for (int i = 0; i < n; ++i)
    a.set_coeff(i, i, 0, TwoPhaseSequence::constant(1.0));
  return a;
}

BandOperator BandOperator::shift(int n, Site y) {
  BandOperator a(n, std::abs(y));
  for (int i = 0; i < n; ++i)
    a.set_coeff(i, i, y, TwoPhaseSequence::constant(1.0));
  return a;
}

BandOperator BandOperator::multiplication(
    const std::vector<std::vector<TwoPhaseSequence>>& m) {
  const int n = static_cast<int>(m.size());
  BandOperator a(n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n)
      throw std::invalid_argument("multiplication grid must be square");
    for (int j = 0; j < n; ++j) a.set_coeff(i, j, 0, m[i][j]);
  }
  return a;
}

BandOperator BandOperator::from_blocks(const BandOperator& a00,
                                       const BandOperator& a01,
                                       const BandOperator& a10,
                                       const BandOperator& a11) {
  const BandOperator* blocks[2][2] = {{&a00, &a01}, {&a10, &a11}};
  Site k = 0;
  for (auto& row : blocks)
    for (auto* b : row) {
      if (b->block_size() != 1)
        throw std::invalid_argument("blocks must be scalar operators");
      k = std::max(k, b->band_radius());
    }
  BandOperator r(2, k);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (const auto& [idx, s] : blocks[i][j]->coefficients())
        r.set_coeff(i, j, idx.y, s);
  return r;
}

FiniteVector apply(const BandOperator& a, const FiniteVector& v) {
  if (v.block_size() != a.block_size())
    throw std::invalid_argument("operator/vector dimension mismatch");
  FiniteVector out(a.block_size());
  for (const auto& [idx, s] : a.coefficients()) {
    for (const auto& [key, val] : v.entries()) {
      const auto& [j, site] = key;
      if (j != idx.j) continue;
      const Site x = site - idx.y;  // x + y = site
      out.add(idx.i, x, s.value(x) * val);
    }
  }
  return out;
}

// <A* u, v> = <u, A v> forces b_ji(-y, x) = conj(a_ij(y, x - y)).
BandOperator adjoint(const BandOperator& a) {
  BandOperator r(a.block_size(), a.band_radius());
  for (const auto& [idx, s] : a.coefficients())
    r.set_coeff(idx.j, idx.i, -idx.y, s.shifted(-idx.y).conj());
  return r;
}

BandOperator compose(const BandOperator& a, const BandOperator& b) {
  if (a.block_size() != b.block_size())
    throw std::invalid_argument("operator dimension mismatch");
  BandOperator r(a.block_size(), a.band_radius() + b.band_radius());
  std::map<BandIndex, TwoPhaseSequence> acc;
  for (const auto& [ia, sa] : a.coefficients())
    for (const auto& [ib, sb] : b.coefficients()) {
      if (ib.i != ia.j) continue;
      acc[{ia.i, ib.j, ia.y + ib.y}] += sa * sb.shifted(ia.y);
    }
  for (auto& [idx, s] : acc) r.set_coeff(idx.i, idx.j, idx.y, std::move(s));
  return r;
}

BandOperator scale(const BandOperator& a, Complex c) {
  BandOperator r(a.block_size(), a.band_radius());
  for (const auto& [idx, s] : a.coefficients())
    r.set_coeff(idx.i, idx.j, idx.y, c * s);
  return r;
}

BandOperator add(const BandOperator& a, const BandOperator& b) {
  if (a.block_size() != b.block_size())
    throw std::invalid_argument("operator dimension mismatch");
  BandOperator r(a.block_size(), std::max(a.band_radius(), b.band_radius()));
  for (const auto& [idx, s] : a.coefficients())
    r.set_coeff(idx.i, idx.j, idx.y, s);
  for (const auto& [idx, s] : b.coefficients())
    r.set_coeff(idx.i, idx.j, idx.y, r.coeff(idx.i, idx.j, idx.y) + s);
  return r;
}

BandOperator subtract_scalar(const BandOperator& a, Complex lambda) {
  BandOperator r = a;
  if (lambda == Complex{}) return r;
  for (int i = 0; i < a.block_size(); ++i)
    r.set_coeff(i, i, 0,
                a.coeff(i, i, 0) - TwoPhaseSequence::constant(lambda));
  return r;
}

Eigen::MatrixXcd window_matrix(const BandOperator& a, Site row_begin,
                               Site row_end, Site col_begin, Site col_end) {
  const int n = a.block_size();
  const Site rows = row_end - row_begin;
  const Site cols = col_end - col_begin;
  if (rows <= 0 || cols <= 0)
    throw std::invalid_argument("empty site window");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows * n, cols * n);
  for (const auto& [idx, s] : a.coefficients()) {
    for (Site r = row_begin; r < row_end; ++r) {
      const Site c = r + idx.y;
      if (c < col_begin || c >= col_end) continue;
      m((r - row_begin) * n + idx.i, (c - col_begin) * n + idx.j) =
          s.value(r);
    }
  }
  return m;
}

HalfLineMatrix compress_truncate(const BandOperator& a, Side side, Site N) {
  if (N <= a.band_radius())
    throw std::invalid_argument(
        "truncation length must exceed the band radius");
  if (side == Side::R) return {side, N, window_matrix(a, 0, N, 0, N)};
  return {side, N, window_matrix(a, -N, 0, -N, 0)};
}

LaurentMatrixSymbol symbol_at(const BandOperator& a, End end) {
  LaurentMatrixSymbol s(a.block_size());
  for (const auto& [idx, seq] : a.coefficients())
    s.at(idx.i, idx.j).add_coeff(idx.y, seq.limit(end));
  return s;
}

double max_coeff_difference(const BandOperator& a, const BandOperator& b,
                            Site x_begin, Site x_end) {
  if (a.block_size() != b.block_size())
    throw std::invalid_argument("operator dimension mismatch");
  const Site k = std::max(a.band_radius(), b.band_radius());
  double worst = 0.0;
  for (int i = 0; i < a.block_size(); ++i)
    for (int j = 0; j < a.block_size(); ++j)
      for (Site y = -k; y <= k; ++y) {
        const TwoPhaseSequence& sa = a.coeff(i, j, y);
        const TwoPhaseSequence& sb = b.coeff(i, j, y);
        for (Site x = x_begin; x < x_end; ++x)
          worst = std::max(worst, std::abs(sa.value(x) - sb.value(x)));
      }
  return worst;
}

}  // namespace invariants
