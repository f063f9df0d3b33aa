#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invariants/errors.hpp"
#include "invariants/winding.hpp"
#include "test_support.hpp"

using namespace invariants;

namespace {

/// Polynomial with prescribed roots (times z^{shift}), roots kept off the
/// circle by at least `margin`.
LaurentPoly from_roots(testing::Rng& rng, int n_roots, long shift,
                       double margin, std::vector<Complex>* roots_out = nullptr) {
  LaurentPoly p = LaurentPoly::monomial(shift, testing::random_complex(rng));
  if (p.max_abs_coeff() < 0.1) p = LaurentPoly::monomial(shift, 1.0);
  for (int i = 0; i < n_roots; ++i) {
    const bool inside = testing::uniform_int(rng, 0, 1) == 0;
    const double r = inside ? testing::uniform(rng, 0.1, 1.0 - margin)
                            : testing::uniform(rng, 1.0 + margin, 3.0);
    const Complex root =
        std::polar(r, testing::uniform(rng, 0.0, 6.283185307179586));
    if (roots_out) roots_out->push_back(root);
    LaurentPoly factor = LaurentPoly::monomial(1);
    factor.add_coeff(0, -root);
    p *= factor;
  }
  return p;
}

int expected_winding(const std::vector<Complex>& roots, long shift) {
  int w = static_cast<int>(shift);
  for (Complex r : roots)
    if (std::abs(r) < 1.0) ++w;
  return w;
}

}  // namespace

TEST_CASE("monomials wind by their degree") {
  for (long y = -3; y <= 3; ++y) {
    const WindingResult u = winding_unwrap(LaurentPoly::monomial(y, 2.0));
    const WindingResult r = winding_roots(LaurentPoly::monomial(y, 2.0));
    REQUIRE(u.nowhere_vanishing);
    REQUIRE(r.nowhere_vanishing);
    CHECK(*u.winding == y);
    CHECK(*r.winding == y);
  }
}

TEST_CASE("a root outside the disk does not wind") {
  LaurentPoly p = LaurentPoly::monomial(1);
  p.add_coeff(0, -2.0);
  CHECK(*winding_unwrap(p).winding == 0);
  CHECK(*winding_roots(p).winding == 0);
}

TEST_CASE("one interior root winds once") {
  // 2z^2 - 5z + 2 = (2z - 1)(z - 2)
  LaurentPoly p;
  p.add_coeff(2, 2.0);
  p.add_coeff(1, -5.0);
  p.add_coeff(0, 2.0);
  CHECK(*winding(p).winding == 1);
}

TEST_CASE("pole order counts negatively") {
  CHECK(*winding(LaurentPoly::monomial(-2)).winding == -2);
}

TEST_CASE("interior and exterior roots combine") {
  // (z - 1/2)(z - 3)
  LaurentPoly p;
  p.add_coeff(2, 1.0);
  p.add_coeff(1, -3.5);
  p.add_coeff(0, 1.5);
  CHECK(*winding(p).winding == 1);
}

TEST_CASE("constant polynomials wind zero") {
  const WindingResult w = winding(LaurentPoly::constant(Complex(0.0, 3.0)));
  CHECK(w.nowhere_vanishing);
  CHECK(*w.winding == 0);
  CHECK(w.method_agreement);
}

TEST_CASE("the zero polynomial is rejected by the root method") {
  CHECK_THROWS_AS(winding_roots(LaurentPoly{}), std::invalid_argument);
  const WindingResult w = winding_unwrap(LaurentPoly{});
  CHECK(!w.nowhere_vanishing);
}

TEST_CASE("a root on the circle is vanishing for the root method") {
  LaurentPoly p = LaurentPoly::monomial(1);
  p.add_coeff(0, -1.0);  // z - 1
  const WindingResult r = winding_roots(p);
  CHECK(!r.nowhere_vanishing);
  CHECK(!r.winding.has_value());
}

TEST_CASE("both methods agree on random off-circle polynomials") {
  testing::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Complex> roots;
    const long shift = testing::uniform_int(rng, -4, 2);
    const int n_roots = testing::uniform_int(rng, 0, 4);
    const LaurentPoly p = from_roots(rng, n_roots, shift, 0.05, &roots);
    const WindingResult u = winding_unwrap(p);
    const WindingResult r = winding_roots(p);
    REQUIRE(u.nowhere_vanishing);
    REQUIRE(r.nowhere_vanishing);
    CHECK(*u.winding == *r.winding);
    CHECK(*r.winding == expected_winding(roots, shift));
    CHECK(winding(p).method_agreement);
  }
}

TEST_CASE("winding is additive under products") {
  testing::Rng rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const LaurentPoly p =
        from_roots(rng, testing::uniform_int(rng, 0, 3),
                   testing::uniform_int(rng, -2, 2), 0.06);
    const LaurentPoly q =
        from_roots(rng, testing::uniform_int(rng, 0, 3),
                   testing::uniform_int(rng, -2, 2), 0.06);
    CHECK(*winding(p * q).winding == *winding(p).winding + *winding(q).winding);
  }
}

TEST_CASE("reflection through the circle negates the winding") {
  testing::Rng rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const LaurentPoly p =
        from_roots(rng, testing::uniform_int(rng, 0, 3),
                   testing::uniform_int(rng, -2, 2), 0.06);
    CHECK(*winding(p.reflected()).winding == -*winding(p).winding);
  }
}

TEST_CASE("scaling leaves the winding unchanged") {
  testing::Rng rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    const LaurentPoly p =
        from_roots(rng, testing::uniform_int(rng, 0, 3),
                   testing::uniform_int(rng, -2, 2), 0.06);
    Complex c = testing::random_complex(rng, 10.0);
    if (c == Complex{}) c = 1.0;
    CHECK(*winding(c * p).winding == *winding(p).winding);
  }
}
