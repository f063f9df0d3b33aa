#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invariants/two_phase.hpp"
#include "test_support.hpp"

using namespace invariants;

TEST_CASE("defaults follow the sign of the site") {
  const TwoPhaseSequence s(0.0, 1.0);
  CHECK(s.value(-5) == Complex(0.0));
  CHECK(s.value(-1) == Complex(0.0));
  CHECK(s.value(0) == Complex(1.0));
  CHECK(s.value(7) == Complex(1.0));
}

TEST_CASE("overrides win over the limits") {
  const TwoPhaseSequence s(0.0, 1.0, {{3, 7.0}});
  CHECK(s.value(3) == Complex(7.0));
  CHECK(s.value(2) == Complex(1.0));
}

TEST_CASE("constant sequence") {
  const TwoPhaseSequence s = TwoPhaseSequence::constant(Complex(2.0, 1.0));
  CHECK(s.value(-100) == Complex(2.0, 1.0));
  CHECK(s.value(100) == Complex(2.0, 1.0));
}

TEST_CASE("overrides equal to the default are dropped") {
  const TwoPhaseSequence s(0.0, 1.0, {{4, 1.0}, {-2, 5.0}});
  CHECK(s.overrides().size() == 1);
  CHECK(s.value(4) == Complex(1.0));
  CHECK(s.value(-2) == Complex(5.0));
}

TEST_CASE("shift matches pointwise evaluation, including sign crossings") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const TwoPhaseSequence s = testing::random_sequence(rng);
    const Site d = testing::uniform_int(rng, -4, 4);
    const TwoPhaseSequence t = s.shifted(d);
    for (Site x = -12; x <= 12; ++x) CHECK(t.value(x) == s.value(x + d));
    CHECK(t.limit_neg() == s.limit_neg());
    CHECK(t.limit_pos() == s.limit_pos());
  }
}

TEST_CASE("pointwise algebra matches evaluation") {
  testing::Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const TwoPhaseSequence a = testing::random_sequence(rng);
    const TwoPhaseSequence b = testing::random_sequence(rng);
    const Complex c = testing::random_complex(rng);
    for (Site x = -9; x <= 9; ++x) {
      CHECK((a + b).value(x) == a.value(x) + b.value(x));
      CHECK((a - b).value(x) == a.value(x) - b.value(x));
      CHECK((a * b).value(x) == a.value(x) * b.value(x));
      CHECK((c * a).value(x) == c * a.value(x));
      CHECK(a.conj().value(x) == std::conj(a.value(x)));
    }
  }
}
