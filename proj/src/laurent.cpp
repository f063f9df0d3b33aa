#include "invariants/laurent.hpp"

#include <cassert>
#include <stdexcept>

namespace invariants {

LaurentPoly LaurentPoly::monomial(long degree, Complex c) {
  LaurentPoly p;
  p.add_coeff(degree, c);
  return p;
}

long LaurentPoly::deg_min() const {
  assert(!is_zero());
  return coeffs_.begin()->first;
}

long LaurentPoly::deg_max() const {
  assert(!is_zero());
  return coeffs_.rbegin()->first;
}

Complex LaurentPoly::coeff(long m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Complex{} : it->second;
}

void LaurentPoly::add_coeff(long m, Complex c) {
  auto [it, inserted] = coeffs_.emplace(m, c);
  if (!inserted) it->second += c;
  if (it->second == Complex{}) coeffs_.erase(it);
}

Complex LaurentPoly::eval(Complex z) const {
  if (is_zero()) return {};
  // Horner over the dense degree range [deg_min, deg_max], then restore the
  // leading power. Degree spans are small (a few times the band radius).
  Complex acc{};
  for (long m = deg_max(); m >= deg_min(); --m) acc = acc * z + coeff(m);
  long lead = deg_min();
  if (lead > 0)
    for (long d = 0; d < lead; ++d) acc *= z;
  else if (lead < 0) {
    const Complex w = 1.0 / z;
    for (long d = 0; d < -lead; ++d) acc *= w;
  }
  return acc;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly r;
  for (const auto& [m, c] : coeffs_) r.coeffs_.emplace(-m, c);
  return r;
}

double LaurentPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [deg, c] : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.coeffs_) add_coeff(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.coeffs_) add_coeff(m, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly r;
  for (const auto& [m1, c1] : coeffs_)
    for (const auto& [m2, c2] : o.coeffs_) r.add_coeff(m1 + m2, c1 * c2);
  *this = std::move(r);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(Complex c) {
  LaurentPoly r;
  if (c != Complex{})
    for (const auto& [m, v] : coeffs_) r.coeffs_.emplace(m, c * v);
  *this = std::move(r);
  return *this;
}

LaurentMatrixSymbol::LaurentMatrixSymbol(int n) : n_(n), entries_(n * n) {
  if (n <= 0) throw std::invalid_argument("symbol size must be positive");
}

LaurentPoly& LaurentMatrixSymbol::at(int i, int j) {
  assert(i >= 0 && i < n_ && j >= 0 && j < n_);
  return entries_[static_cast<std::size_t>(i) * n_ + j];
}

const LaurentPoly& LaurentMatrixSymbol::at(int i, int j) const {
  assert(i >= 0 && i < n_ && j >= 0 && j < n_);
  return entries_[static_cast<std::size_t>(i) * n_ + j];
}

Eigen::MatrixXcd LaurentMatrixSymbol::eval(Complex z) const {
  Eigen::MatrixXcd m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = at(i, j).eval(z);
  return m;
}

LaurentMatrixSymbol LaurentMatrixSymbol::shifted_by(Complex lambda) const {
  LaurentMatrixSymbol r = *this;
  for (int i = 0; i < n_; ++i) r.at(i, i).add_coeff(0, -lambda);
  return r;
}

LaurentMatrixSymbol operator*(const LaurentMatrixSymbol& a,
                              const LaurentMatrixSymbol& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("symbol size mismatch");
  const int n = a.size();
  LaurentMatrixSymbol r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) r.at(i, j) += a.at(i, l) * b.at(l, j);
  return r;
}

namespace {

LaurentPoly det_recursive(const std::vector<LaurentPoly>& m, int n) {
  if (n == 1) return m[0];
  LaurentPoly result;
  std::vector<LaurentPoly> minor((n - 1) * (n - 1));
  for (int col = 0; col < n; ++col) {
    if (m[col].is_zero()) continue;
    for (int i = 1; i < n; ++i) {
      int mj = 0;
      for (int j = 0; j < n; ++j) {
        if (j == col) continue;
        minor[static_cast<std::size_t>(i - 1) * (n - 1) + mj] =
            m[static_cast<std::size_t>(i) * n + j];
        ++mj;
      }
    }
    LaurentPoly term = m[col] * det_recursive(minor, n - 1);
    if (col % 2 == 0)
      result += term;
    else
      result -= term;
  }
  return result;
}

}  // namespace

LaurentPoly det(const LaurentMatrixSymbol& s) {
  const int n = s.size();
  std::vector<LaurentPoly> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[static_cast<std::size_t>(i) * n + j] = s.at(i, j);
  return det_recursive(m, n);
}

}  // namespace invariants
