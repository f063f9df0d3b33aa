#pragma once

#include <Eigen/Dense>
#include <compare>
#include <map>
#include <vector>

#include "invariants/laurent.hpp"
#include "invariants/two_phase.hpp"

namespace invariants {

/// Half-line side: L covers sites x < 0, R covers sites x >= 0.
enum class Side { L, R };

/// Finitely supported vector in l^2(Z, C^n). Components are 0-based.
class FiniteVector {
 public:
  explicit FiniteVector(int n) : n_(n) {}

  int block_size() const { return n_; }
  const std::map<std::pair<int, Site>, Complex>& entries() const {
    return entries_;
  }

  Complex get(int component, Site x) const;
  void set(int component, Site x, Complex v);
  void add(int component, Site x, Complex v);

  /// Conjugate-linear in this vector: <u, v> = sum conj(u) * v.
  Complex inner(const FiniteVector& other) const;
  double norm() const;

 private:
  int n_;
  std::map<std::pair<int, Site>, Complex> entries_;
};

struct BandIndex {
  int i;   // row component, 0-based
  int j;   // column component, 0-based
  Site y;  // shift offset, |y| <= band radius
  auto operator<=>(const BandIndex&) const = default;
};

/// Banded lattice operator on l^2(Z, C^n): a finite sum over |y| <= k of
/// multiplication coefficients a_ij(y, x) times the shift by y, acting as
/// (A psi)_i(x) = sum_j sum_y a_ij(y, x) psi_j(x + y). Coefficients are
/// stored sparsely; a missing entry is the zero sequence.
class BandOperator {
 public:
  BandOperator(int n, Site k);

  int block_size() const { return n_; }
  Site band_radius() const { return k_; }
  const std::map<BandIndex, TwoPhaseSequence>& coefficients() const {
    return coeff_;
  }

  const TwoPhaseSequence& coeff(int i, int j, Site y) const;
  void set_coeff(int i, int j, Site y, TwoPhaseSequence s);

  static BandOperator identity(int n);
  /// diag(L^y, ..., L^y): shifts every component by y.
  static BandOperator shift(int n, Site y);
  /// Pure multiplication operator (k = 0) from an n x n grid of sequences.
  static BandOperator multiplication(
      const std::vector<std::vector<TwoPhaseSequence>>& m);
  /// Assemble an n=2 operator from four scalar (n=1) blocks.
  static BandOperator from_blocks(const BandOperator& a00,
                                  const BandOperator& a01,
                                  const BandOperator& a10,
                                  const BandOperator& a11);

 private:
  int n_;
  Site k_;
  std::map<BandIndex, TwoPhaseSequence> coeff_;
};

FiniteVector apply(const BandOperator& a, const FiniteVector& v);
BandOperator adjoint(const BandOperator& a);
BandOperator compose(const BandOperator& a, const BandOperator& b);
BandOperator scale(const BandOperator& a, Complex c);
BandOperator add(const BandOperator& a, const BandOperator& b);
/// A - lambda on the diagonal.
BandOperator subtract_scalar(const BandOperator& a, Complex lambda);

/// Dense sampling of the operator over a rectangular site window: rows run
/// over sites [row_begin, row_end), columns over [col_begin, col_end), in
/// site-major component-minor order. Entry ((r,i),(c,j)) = a_ij(c - r, r).
Eigen::MatrixXcd window_matrix(const BandOperator& a, Site row_begin,
                               Site row_end, Site col_begin, Site col_end);

/// Half-line compression cut to N sites: sites [0, N) for side R and
/// [-N, 0) for side L, ordered site-major with components contiguous per
/// site. Requires N > band radius.
struct HalfLineMatrix {
  Side side;
  Site N;
  Eigen::MatrixXcd data;
};
HalfLineMatrix compress_truncate(const BandOperator& a, Side side, Site N);

/// Matrix of Laurent polynomials with (i,j) entry sum_y a_ij(y, end) z^y.
/// Overrides never enter: only the asymptotic limits do.
LaurentMatrixSymbol symbol_at(const BandOperator& a, End end);

/// Largest absolute difference between the coefficient values of a and b
/// over all component pairs, offsets, and sites in [x_begin, x_end).
double max_coeff_difference(const BandOperator& a, const BandOperator& b,
                            Site x_begin, Site x_end);

}  // namespace invariants
