#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invariants/band_operator.hpp"
#include "invariants/dense.hpp"
#include "test_support.hpp"

using namespace invariants;

namespace {

FiniteVector delta(int n, int component, Site x) {
  FiniteVector v(n);
  v.set(component, x, 1.0);
  return v;
}

double vec_distance(const FiniteVector& u, const FiniteVector& v) {
  double worst = 0.0;
  for (const auto& [key, val] : u.entries())
    worst = std::max(worst, std::abs(val - v.get(key.first, key.second)));
  for (const auto& [key, val] : v.entries())
    worst = std::max(worst, std::abs(val - u.get(key.first, key.second)));
  return worst;
}

}  // namespace

TEST_CASE("the shift maps delta_0 to delta_-1") {
  const BandOperator L = BandOperator::shift(1, 1);
  const FiniteVector out = apply(L, delta(1, 0, 0));
  CHECK(out.get(0, -1) == Complex(1.0));
  CHECK(out.entries().size() == 1);
}

TEST_CASE("identity acts trivially") {
  testing::Rng rng(3);
  const BandOperator id = BandOperator::identity(2);
  const FiniteVector v = testing::random_vector(rng, 2);
  CHECK(vec_distance(apply(id, v), v) == 0.0);
}

TEST_CASE("two-phase diagonal multiplication") {
  BandOperator a(1, 0);
  a.set_coeff(0, 0, 0, TwoPhaseSequence(2.0, 3.0));
  FiniteVector v(1);
  v.set(0, -1, 1.0);
  v.set(0, 0, 1.0);
  const FiniteVector out = apply(a, v);
  CHECK(out.get(0, -1) == Complex(2.0));
  CHECK(out.get(0, 0) == Complex(3.0));
}

TEST_CASE("adjoint of the shift is the reverse shift") {
  const BandOperator L = BandOperator::shift(1, 1);
  const BandOperator Lstar = adjoint(L);
  CHECK(Lstar.coeff(0, 0, -1) == TwoPhaseSequence::constant(1.0));
  CHECK(Lstar.coeff(0, 0, 1).is_zero());
}

TEST_CASE("adjoint of a multiplication operator conjugates it") {
  testing::Rng rng(4);
  const TwoPhaseSequence m = testing::random_sequence(rng);
  BandOperator a(1, 0);
  a.set_coeff(0, 0, 0, m);
  CHECK(adjoint(a).coeff(0, 0, 0) == m.conj());
}

TEST_CASE("adjoint of q L carries the shifted conjugate coefficient") {
  testing::Rng rng(5);
  const TwoPhaseSequence q = testing::random_sequence(rng);
  BandOperator a(1, 1);
  a.set_coeff(0, 0, 1, q);
  const BandOperator astar = adjoint(a);
  for (Site x = -8; x <= 8; ++x)
    CHECK(astar.coeff(0, 0, -1).value(x) == std::conj(q.value(x - 1)));
}

TEST_CASE("adjoint duality on random finite vectors") {
  testing::Rng rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::uniform_int(rng, 1, 3);
    const Site k = testing::uniform_int(rng, 0, 3);
    const BandOperator a = testing::random_operator(rng, n, k);
    const BandOperator astar = adjoint(a);
    const FiniteVector u = testing::random_vector(rng, n);
    const FiniteVector v = testing::random_vector(rng, n);
    const Complex lhs = apply(astar, u).inner(v);
    const Complex rhs = u.inner(apply(a, v));
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("adjoint is an involution") {
  testing::Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const BandOperator a = testing::random_operator(
        rng, testing::uniform_int(rng, 1, 3), testing::uniform_int(rng, 0, 3));
    CHECK(max_coeff_difference(adjoint(adjoint(a)), a, -10, 10) == 0.0);
  }
}

TEST_CASE("compose of the shift with its inverse is the identity") {
  const BandOperator c =
      compose(BandOperator::shift(1, 1), BandOperator::shift(1, -1));
  CHECK(max_coeff_difference(c, BandOperator::identity(1), -10, 10) == 0.0);
}

TEST_CASE("compose of a multiplication with the shift") {
  testing::Rng rng(10);
  const TwoPhaseSequence m = testing::random_sequence(rng);
  BandOperator mult(1, 0);
  mult.set_coeff(0, 0, 0, m);
  const BandOperator c = compose(mult, BandOperator::shift(1, 1));
  for (Site x = -8; x <= 8; ++x)
    CHECK(c.coeff(0, 0, 1).value(x) == m.value(x));
}

TEST_CASE("compose agrees with applying one operator after the other") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::uniform_int(rng, 1, 3);
    const BandOperator a =
        testing::random_operator(rng, n, testing::uniform_int(rng, 0, 2));
    const BandOperator b =
        testing::random_operator(rng, n, testing::uniform_int(rng, 0, 2));
    const FiniteVector v = testing::random_vector(rng, n);
    CHECK(vec_distance(apply(compose(a, b), v), apply(a, apply(b, v))) <
          1e-12);
  }
}

TEST_CASE("symbol of a composition is the product of symbols") {
  testing::Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = testing::uniform_int(rng, 1, 3);
    const BandOperator a =
        testing::random_operator(rng, n, testing::uniform_int(rng, 0, 2));
    const BandOperator b =
        testing::random_operator(rng, n, testing::uniform_int(rng, 0, 2));
    for (End end : {End::neg, End::pos}) {
      const LaurentMatrixSymbol lhs = symbol_at(compose(a, b), end);
      const LaurentMatrixSymbol rhs = symbol_at(a, end) * symbol_at(b, end);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const LaurentPoly diff = lhs.at(i, j) - rhs.at(i, j);
          CHECK(diff.max_abs_coeff() < 1e-12);
        }
    }
  }
}

TEST_CASE("shift compression has ones on the superdiagonal") {
  const HalfLineMatrix m =
      compress_truncate(BandOperator::shift(1, 1), Side::R, 3);
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(3, 3);
  expected(0, 1) = 1.0;
  expected(1, 2) = 1.0;
  CHECK((m.data - expected).norm() == 0.0);
}

TEST_CASE("identity compression is the identity matrix") {
  const HalfLineMatrix m =
      compress_truncate(BandOperator::identity(2), Side::L, 4);
  CHECK((m.data - Eigen::MatrixXcd::Identity(8, 8)).norm() == 0.0);
}

TEST_CASE("two-phase diagonal compresses to the negative-side limit") {
  BandOperator a(1, 0);
  a.set_coeff(0, 0, 0, TwoPhaseSequence(2.0, 3.0));
  const HalfLineMatrix m = compress_truncate(a, Side::L, 2);
  CHECK(m.data(0, 0) == Complex(2.0));
  CHECK(m.data(1, 1) == Complex(2.0));
}

TEST_CASE("compression rejects windows inside the band") {
  CHECK_THROWS_AS(compress_truncate(BandOperator::shift(1, 2), Side::R, 2),
                  std::invalid_argument);
}

TEST_CASE("symbol of the shift is z") {
  const LaurentMatrixSymbol s = symbol_at(BandOperator::shift(1, 1), End::pos);
  CHECK(s.at(0, 0).coeff(1) == Complex(1.0));
  CHECK(s.at(0, 0).coeffs().size() == 1);
}

TEST_CASE("symbols ignore overrides and split by end") {
  BandOperator a(1, 0);
  a.set_coeff(0, 0, 0, TwoPhaseSequence(2.0, 3.0, {{0, 99.0}}));
  CHECK(symbol_at(a, End::neg).at(0, 0).coeff(0) == Complex(2.0));
  CHECK(symbol_at(a, End::pos).at(0, 0).coeff(0) == Complex(3.0));
}

TEST_CASE("splitting into half lines changes the operator by bounded rank") {
  // The dense window of A minus the direct sum of its half-line
  // compressions has rank at most 2nk however large the window is.
  testing::Rng rng(13);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = testing::uniform_int(rng, 1, 2);
    const Site k = testing::uniform_int(rng, 1, 2);
    const BandOperator a = testing::random_operator(rng, n, k);
    for (Site N : {Site{4 * k}, Site{8 * k}, Site{16 * k}}) {
      Eigen::MatrixXcd full = window_matrix(a, -N, N, -N, N);
      Eigen::MatrixXcd split = Eigen::MatrixXcd::Zero(full.rows(),
                                                      full.cols());
      split.topLeftCorner(N * n, N * n) = window_matrix(a, -N, 0, -N, 0);
      split.bottomRightCorner(N * n, N * n) = window_matrix(a, 0, N, 0, N);
      const Eigen::MatrixXcd diff = full - split;
      const auto sv = dense::singular_values(diff);
      int rank = 0;
      for (double s : sv)
        if (s > 1e-10 * (sv.empty() ? 1.0 : sv.front())) ++rank;
      CHECK(rank <= 2 * n * k);
    }
  }
}
