#pragma once

#include <complex>
#include <cstdint>
#include <map>

namespace invariants {

using Complex = std::complex<double>;
using Site = std::int64_t;

/// Which asymptotic end of the lattice a quantity refers to.
enum class End { neg, pos };

/// A doubly-infinite scalar sequence that sits exactly at one of two limit
/// values outside a finite override window: sites x >= 0 default to
/// limit_pos, sites x < 0 to limit_neg, and a finite set of overrides may
/// replace individual entries. All pointwise algebra below preserves this
/// representation exactly.
class TwoPhaseSequence {
 public:
  /// The zero sequence.
  TwoPhaseSequence() = default;

  TwoPhaseSequence(Complex limit_neg, Complex limit_pos,
                   std::map<Site, Complex> overrides = {});

  static TwoPhaseSequence constant(Complex c) { return {c, c}; }

  Complex value(Site x) const;
  Complex limit_neg() const { return limit_neg_; }
  Complex limit_pos() const { return limit_pos_; }
  Complex limit(End e) const {
    return e == End::neg ? limit_neg_ : limit_pos_;
  }
  const std::map<Site, Complex>& overrides() const { return overrides_; }

  bool is_zero() const;

  /// Pointwise complex conjugate.
  TwoPhaseSequence conj() const;

  /// The sequence x -> value(x + d). Sites whose default limit changes sign
  /// under the shift get explicit overrides so values are preserved exactly.
  TwoPhaseSequence shifted(Site d) const;

  /// Apply f pointwise to both limits and every override.
  template <typename F>
  TwoPhaseSequence map(F&& f) const {
    std::map<Site, Complex> ov;
    for (const auto& [x, v] : overrides_) ov.emplace(x, f(v));
    return {f(limit_neg_), f(limit_pos_), std::move(ov)};
  }

  TwoPhaseSequence& operator+=(const TwoPhaseSequence& o);
  TwoPhaseSequence& operator-=(const TwoPhaseSequence& o);
  TwoPhaseSequence& operator*=(const TwoPhaseSequence& o);
  TwoPhaseSequence& operator*=(Complex c);

  friend TwoPhaseSequence operator+(TwoPhaseSequence a,
                                    const TwoPhaseSequence& b) {
    return a += b;
  }
  friend TwoPhaseSequence operator-(TwoPhaseSequence a,
                                    const TwoPhaseSequence& b) {
    return a -= b;
  }
  friend TwoPhaseSequence operator*(TwoPhaseSequence a,
                                    const TwoPhaseSequence& b) {
    return a *= b;
  }
  friend TwoPhaseSequence operator*(Complex c, TwoPhaseSequence a) {
    return a *= c;
  }
  friend TwoPhaseSequence operator-(const TwoPhaseSequence& a) {
    return Complex(-1.0) * a;
  }

  bool operator==(const TwoPhaseSequence& o) const;

 private:
  /// Drop overrides that coincide exactly with the default limit.
  void normalize();

  Complex limit_neg_{0.0, 0.0};
  Complex limit_pos_{0.0, 0.0};
  std::map<Site, Complex> overrides_;
};

}  // namespace invariants
