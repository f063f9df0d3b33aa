#include "invariants/two_phase.hpp"

#include <algorithm>
#include <utility>

namespace invariants {

TwoPhaseSequence::TwoPhaseSequence(Complex limit_neg, Complex limit_pos,
                                   std::map<Site, Complex> overrides)
    : limit_neg_(limit_neg),
      limit_pos_(limit_pos),
      overrides_(std::move(overrides)) {
  normalize();
}

Complex TwoPhaseSequence::value(Site x) const {
  if (auto it = overrides_.find(x); it != overrides_.end()) return it->second;
  return x >= 0 ? limit_pos_ : limit_neg_;
}

bool TwoPhaseSequence::is_zero() const {
  return limit_neg_ == Complex{} && limit_pos_ == Complex{} &&
         overrides_.empty();
}

void TwoPhaseSequence::normalize() {
  for (auto it = overrides_.begin(); it != overrides_.end();) {
    const Complex def = it->first >= 0 ? limit_pos_ : limit_neg_;
    it = (it->second == def) ? overrides_.erase(it) : std::next(it);
  }
}

TwoPhaseSequence TwoPhaseSequence::conj() const {
  return map([](Complex v) { return std::conj(v); });
}

TwoPhaseSequence TwoPhaseSequence::shifted(Site d) const {
  std::map<Site, Complex> ov;
  for (const auto& [x, v] : overrides_) ov.emplace(x - d, v);
  // Sites that cross x = 0 under the shift keep their original value.
  if (d > 0) {
    for (Site x = -d; x < 0; ++x) ov.try_emplace(x, value(x + d));
  } else if (d < 0) {
    for (Site x = 0; x < -d; ++x) ov.try_emplace(x, value(x + d));
  }
  return {limit_neg_, limit_pos_, std::move(ov)};
}

namespace {

template <typename Op>
TwoPhaseSequence combine(const TwoPhaseSequence& a, const TwoPhaseSequence& b,
                         Op op) {
  std::map<Site, Complex> ov;
  for (const auto& [x, v] : a.overrides()) ov[x] = op(v, b.value(x));
  for (const auto& [x, v] : b.overrides()) ov.try_emplace(x, op(a.value(x), v));
  return {op(a.limit_neg(), b.limit_neg()), op(a.limit_pos(), b.limit_pos()),
          std::move(ov)};
}

}  // namespace

TwoPhaseSequence& TwoPhaseSequence::operator+=(const TwoPhaseSequence& o) {
  *this = combine(*this, o, [](Complex x, Complex y) { return x + y; });
  return *this;
}

TwoPhaseSequence& TwoPhaseSequence::operator-=(const TwoPhaseSequence& o) {
  *this = combine(*this, o, [](Complex x, Complex y) { return x - y; });
  return *this;
}

TwoPhaseSequence& TwoPhaseSequence::operator*=(const TwoPhaseSequence& o) {
  *this = combine(*this, o, [](Complex x, Complex y) { return x * y; });
  return *this;
}

TwoPhaseSequence& TwoPhaseSequence::operator*=(Complex c) {
  *this = map([c](Complex v) { return c * v; });
  return *this;
}

bool TwoPhaseSequence::operator==(const TwoPhaseSequence& o) const {
  return limit_neg_ == o.limit_neg_ && limit_pos_ == o.limit_pos_ &&
         overrides_ == o.overrides_;
}

}  // namespace invariants
