#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "invariants/band_operator.hpp"
#include "invariants/walk_parameters.hpp"
#include "invariants/winding.hpp"

namespace invariants::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Complex random_complex(Rng& rng, double radius = 1.0) {
  return std::polar(uniform(rng, 0.0, radius),
                    uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

inline TwoPhaseSequence random_sequence(Rng& rng, double radius = 1.0,
                                        int max_overrides = 4,
                                        Site window = 5) {
  std::map<Site, Complex> ov;
  const int count = uniform_int(rng, 0, max_overrides);
  for (int i = 0; i < count; ++i)
    ov[uniform_int(rng, -static_cast<int>(window),
                   static_cast<int>(window))] = random_complex(rng, radius);
  return {random_complex(rng, radius), random_complex(rng, radius),
          std::move(ov)};
}

/// Unconstrained random band operator for algebra properties.
inline BandOperator random_operator(Rng& rng, int n, Site k,
                                    double density = 0.7) {
  BandOperator a(n, k);
  bool any = false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (Site y = -k; y <= k; ++y)
        if (uniform(rng, 0.0, 1.0) < density) {
          a.set_coeff(i, j, y, random_sequence(rng));
          any = true;
        }
  if (!any) a.set_coeff(0, 0, 0, random_sequence(rng));
  return a;
}

inline FiniteVector random_vector(Rng& rng, int n, Site window = 8,
                                  int entries = 6) {
  FiniteVector v(n);
  for (int e = 0; e < entries; ++e)
    v.set(uniform_int(rng, 0, n - 1),
          uniform_int(rng, -static_cast<int>(window),
                      static_cast<int>(window)),
          random_complex(rng));
  return v;
}

/// Random Fredholm two-phase operator whose symbol determinants keep all
/// roots well away from the unit circle at both ends, so truncated kernels
/// settle within small windows. Built from per-end dominant diagonal
/// monomials (different dominant degree per end gives nonzero indices)
/// plus a small off-diagonal perturbation and interior overrides; draws
/// are rejected until the root margin and determinant conditioning hold.
inline BandOperator random_fredholm_operator(Rng& rng, int n, Site k,
                                             double margin = 0.28) {
  for (;;) {
    BandOperator a(n, 1 > k ? 1 : k);
    const Site kk = a.band_radius();
    for (int i = 0; i < n; ++i) {
      Site m_neg = uniform_int(rng, -static_cast<int>(kk),
                               static_cast<int>(kk));
      Site m_pos = uniform_int(rng, -static_cast<int>(kk),
                               static_cast<int>(kk));
      const Complex c_neg = std::polar(uniform(rng, 0.8, 1.2),
                                       uniform(rng, 0.0, 2 * std::numbers::pi));
      const Complex c_pos = std::polar(uniform(rng, 0.8, 1.2),
                                       uniform(rng, 0.0, 2 * std::numbers::pi));
      const double eps = uniform(rng, 0.05, 0.2);
      if (m_neg == m_pos) {
        a.set_coeff(i, i, m_neg, TwoPhaseSequence(c_neg, c_pos));
      } else {
        a.set_coeff(i, i, m_neg, TwoPhaseSequence(c_neg, eps * c_pos));
        a.set_coeff(i, i, m_pos, TwoPhaseSequence(eps * c_neg, c_pos));
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (uniform(rng, 0.0, 1.0) < 0.5) {
          const Site y = uniform_int(rng, -static_cast<int>(kk),
                                     static_cast<int>(kk));
          a.set_coeff(i, j, y,
                      TwoPhaseSequence(random_complex(rng, 0.05),
                                       random_complex(rng, 0.05)));
        }
      }
    // Interior overrides: compact perturbations that must not move either
    // invariant.
    const int n_ov = uniform_int(rng, 0, 4);
    for (int o = 0; o < n_ov; ++o) {
      const int i = uniform_int(rng, 0, n - 1);
      const int j = uniform_int(rng, 0, n - 1);
      const Site y = uniform_int(rng, -static_cast<int>(kk),
                                 static_cast<int>(kk));
      TwoPhaseSequence s = a.coeff(i, j, y);
      std::map<Site, Complex> ov = s.overrides();
      ov[uniform_int(rng, -5, 5)] = random_complex(rng, 0.6);
      a.set_coeff(i, j, y,
                  TwoPhaseSequence(s.limit_neg(), s.limit_pos(), ov));
    }

    bool ok = true;
    for (End end : {End::neg, End::pos}) {
      const LaurentPoly d = det(symbol_at(a, end));
      if (d.is_zero()) {
        ok = false;
        break;
      }
      const auto [lo, hi] = modulus_range_on_circle(d, 512);
      if (lo < 5e-3 * hi || unit_circle_root_distance(d) < margin) {
        ok = false;
        break;
      }
    }
    if (ok) return a;
  }
}

/// Walk parameter draw. Limits are given by (p, a) magnitudes per end with
/// random phases on q and b; overrides (when requested) perturb p/q and
/// a/b jointly so the unit-norm constraints hold sitewise.
inline TwoPhaseSequence coin_partner(Rng& rng, const TwoPhaseSequence& real_seq) {
  auto partner_value = [&rng](Complex r) {
    const double m2 = 1.0 - r.real() * r.real();
    return std::polar(std::sqrt(m2 > 0.0 ? m2 : 0.0),
                      uniform(rng, 0.0, 2.0 * std::numbers::pi));
  };
  std::map<Site, Complex> ov;
  for (const auto& [x, v] : real_seq.overrides())
    ov[x] = partner_value(v);
  return {partner_value(real_seq.limit_neg()),
          partner_value(real_seq.limit_pos()), std::move(ov)};
}

inline TwoPhaseSequence random_real_coin(Rng& rng, double lim_neg,
                                         double lim_pos, int n_overrides) {
  std::map<Site, Complex> ov;
  for (int i = 0; i < n_overrides; ++i)
    ov[uniform_int(rng, -5, 5)] = Complex(uniform(rng, -1.0, 1.0), 0.0);
  return {Complex(lim_neg, 0.0), Complex(lim_pos, 0.0), std::move(ov)};
}

inline WalkParameters walk_from_limits(Rng& rng, double p_neg, double p_pos,
                                       double a_neg, double a_pos,
                                       int n_overrides = 3) {
  WalkParameters params;
  params.p = random_real_coin(rng, p_neg, p_pos, n_overrides);
  params.q = coin_partner(rng, params.p);
  params.a = random_real_coin(rng, a_neg, a_pos, n_overrides);
  params.b = coin_partner(rng, params.a);
  return params;
}

inline WalkParameters random_walk(Rng& rng, int n_overrides = 3) {
  return walk_from_limits(rng, uniform(rng, -0.99, 0.99),
                          uniform(rng, -0.99, 0.99),
                          uniform(rng, -0.99, 0.99),
                          uniform(rng, -0.99, 0.99), n_overrides);
}

/// One end's (p, a) limits for a requested regime and sign pattern, with a
/// comfortable gap between |p| and |a|.
inline std::pair<double, double> regime_limits(Rng& rng, bool p_above,
                                               int sign_p, int sign_a) {
  const double big = uniform(rng, 0.55, 0.95);
  const double small = uniform(rng, 0.05, big - 0.25);
  const double p = p_above ? big : small;
  const double a = p_above ? small : big;
  return {sign_p * p, sign_a * a};
}

}  // namespace invariants::testing
