#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "invariants/two_phase.hpp"

namespace invariants {

/// Finitely supported Laurent polynomial sum_m c_m z^m with complex
/// coefficients, stored sparsely without zero entries.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(Complex c) { return monomial(0, c); }
  static LaurentPoly monomial(long degree, Complex c = 1.0);

  bool is_zero() const { return coeffs_.empty(); }
  long deg_min() const;  // requires !is_zero()
  long deg_max() const;  // requires !is_zero()
  Complex coeff(long m) const;
  const std::map<long, Complex>& coeffs() const { return coeffs_; }

  void add_coeff(long m, Complex c);

  Complex eval(Complex z) const;

  /// z -> p(1/z): the coefficient at degree m moves to degree -m. On the
  /// unit circle this is evaluation at the conjugate point.
  LaurentPoly reflected() const;

  double max_abs_coeff() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(Complex c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) {
    return a *= b;
  }
  friend LaurentPoly operator*(Complex c, LaurentPoly a) { return a *= c; }

  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::map<long, Complex> coeffs_;
};

/// Square matrix of Laurent polynomials; evaluation at z on the unit circle
/// yields an ordinary complex matrix.
class LaurentMatrixSymbol {
 public:
  explicit LaurentMatrixSymbol(int n);

  int size() const { return n_; }
  LaurentPoly& at(int i, int j);
  const LaurentPoly& at(int i, int j) const;

  Eigen::MatrixXcd eval(Complex z) const;

  /// S - lambda * I.
  LaurentMatrixSymbol shifted_by(Complex lambda) const;

  friend LaurentMatrixSymbol operator*(const LaurentMatrixSymbol& a,
                                       const LaurentMatrixSymbol& b);

 private:
  int n_ = 0;
  std::vector<LaurentPoly> entries_;  // row-major
};

/// Exact Laurent-polynomial determinant by cofactor expansion.
LaurentPoly det(const LaurentMatrixSymbol& s);

}  // namespace invariants
