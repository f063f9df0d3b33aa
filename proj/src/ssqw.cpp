#include "invariants/ssqw.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "invariants/errors.hpp"

namespace invariants {

namespace {

constexpr Complex kI{0.0, 1.0};

TwoPhaseSequence real_sqrt_one_plus(const TwoPhaseSequence& s, double sign) {
  return s.map([sign](Complex v) {
    return Complex(std::sqrt(std::max(0.0, 1.0 + sign * v.real())), 0.0);
  });
}

TwoPhaseSequence abs_seq(const TwoPhaseSequence& s) {
  return s.map([](Complex v) { return Complex(std::abs(v), 0.0); });
}

TwoPhaseSequence phase_seq(const TwoPhaseSequence& s) {
  return s.map([](Complex v) { return Complex(arg_2pi(v), 0.0); });
}

TwoPhaseSequence exp_i(const TwoPhaseSequence& angles, double sign) {
  return angles.map(
      [sign](Complex v) { return std::polar(1.0, sign * v.real()); });
}

/// Scalar (n=1) multiplication operator.
BandOperator mult1(const TwoPhaseSequence& s) {
  BandOperator a(1, 0);
  a.set_coeff(0, 0, 0, s);
  return a;
}

BandOperator band1(const TwoPhaseSequence& at_minus1,
                   const TwoPhaseSequence& at_0,
                   const TwoPhaseSequence& at_plus1) {
  BandOperator a(1, 1);
  a.set_coeff(0, 0, -1, at_minus1);
  a.set_coeff(0, 0, 0, at_0);
  a.set_coeff(0, 0, 1, at_plus1);
  return a;
}

void check_phase(const TwoPhaseSequence& s, const TwoPhaseSequence& angle,
                 const char* name) {
  auto check = [&](Site x) {
    const Complex v = s.value(x);
    if (v == Complex{}) return;
    const Complex rebuilt = std::abs(v) * std::polar(1.0, angle.value(x).real());
    if (std::abs(v - rebuilt) > kWalkConstraintTol * (1.0 + std::abs(v))) {
      std::ostringstream msg;
      msg << name << ": phase sequence does not match the parameter at x=" << x;
      throw std::invalid_argument(msg.str());
    }
  };
  for (const auto& [x, v] : s.overrides()) check(x);
  for (const auto& [x, v] : angle.overrides()) check(x);
  // Representative sites for the two limits.
  const Site far = 1 + std::max({
      s.overrides().empty() ? Site{0} : std::abs(s.overrides().rbegin()->first),
      s.overrides().empty() ? Site{0} : std::abs(s.overrides().begin()->first),
      angle.overrides().empty() ? Site{0}
                                : std::abs(angle.overrides().rbegin()->first),
      angle.overrides().empty() ? Site{0}
                                : std::abs(angle.overrides().begin()->first)});
  check(far);
  check(-far);
}

}  // namespace

BandOperator build_gamma(const WalkParameters& params) {
  validate(params);
  BandOperator g(2, 1);
  g.set_coeff(0, 0, 0, params.p);
  g.set_coeff(0, 1, 1, params.q);
  g.set_coeff(1, 0, -1, params.q.conj().shifted(-1));
  g.set_coeff(1, 1, 0, -params.p.shifted(-1));
  return g;
}

BandOperator build_gamma_prime(const WalkParameters& params) {
  validate(params);
  return BandOperator::multiplication(
      {{params.a, params.b.conj()}, {params.b, -params.a}});
}

BandOperator build_evolution(const WalkParameters& params) {
  return compose(build_gamma(params), build_gamma_prime(params));
}

TwoPhaseSequence pointwise_theta(const WalkParameters& params) {
  return phase_seq(params.q);
}

TwoPhaseSequence pointwise_phi(const WalkParameters& params) {
  return phase_seq(params.b);
}

ChiralBlocks chiral_blocks(const WalkParameters& params,
                           const TwoPhaseSequence& theta,
                           const TwoPhaseSequence& phi) {
  validate(params);
  check_phase(params.q, theta, "theta");
  check_phase(params.b, phi, "phi");

  const TwoPhaseSequence p_plus = real_sqrt_one_plus(params.p, +1.0);
  const TwoPhaseSequence p_minus = real_sqrt_one_plus(params.p, -1.0);
  const TwoPhaseSequence a_plus = real_sqrt_one_plus(params.a, +1.0);
  const TwoPhaseSequence a_minus = real_sqrt_one_plus(params.a, -1.0);
  const TwoPhaseSequence q_abs = abs_seq(params.q);
  const TwoPhaseSequence b_abs = abs_seq(params.b);
  const TwoPhaseSequence e_pt = exp_i(theta, +1.0);   // e^{i theta(x)}
  const TwoPhaseSequence e_mt = exp_i(theta, -1.0);   // e^{-i theta(x)}
  const TwoPhaseSequence e_pf = exp_i(phi, +1.0);
  const TwoPhaseSequence e_mf = exp_i(phi, -1.0);

  const auto& p = params.p;
  const auto& q = params.q;
  const auto& a = params.a;
  const auto& b = params.b;

  ChiralBlocks blocks{
      // -2i q_eps0 has the single-band coefficients below; divide out -2i.
      scale(band1(-(p_minus * p_minus.shifted(-1) * b.conj() * e_mt.shifted(-1)),
                  -(q_abs * (a + a.shifted(1))),
                  p_plus * p_plus.shifted(1) * b.shifted(1) * e_pt),
            kI * 0.5),
      // 2i q_gam0, divided by 2i.
      scale(band1(a_plus * a_plus.shifted(-1) * q.conj().shifted(-1) * e_mf,
                  -(b_abs * (p + p.shifted(-1))),
                  -(a_minus * a_minus.shifted(1) * q * e_pf.shifted(1))),
            -kI * 0.5),
      // 2 r_eps1 / 2.
      scale(band1(p_plus * p_minus.shifted(-1) * b.conj() * e_mt.shifted(-1),
                  p_plus * p_plus * a - p_minus * p_minus * a.shifted(1),
                  p_minus * p_plus.shifted(1) * b.shifted(1) * e_pt),
            0.5),
      // 2 r_eps2 / 2.
      scale(band1(p_minus * p_plus.shifted(-1) * b.conj() * e_mt.shifted(-1),
                  -(p_minus * p_minus * a) + p_plus * p_plus * a.shifted(1),
                  p_plus * p_minus.shifted(1) * b.shifted(1) * e_pt),
            0.5),
      // 2 r_gam1 / 2.
      scale(band1(a_minus * a_plus.shifted(-1) * q.conj().shifted(-1) * e_mf,
                  a_plus * a_plus * p - a_minus * a_minus * p.shifted(-1),
                  a_plus * a_minus.shifted(1) * q * e_pf.shifted(1)),
            0.5),
      // 2 r_gam2 / 2.
      scale(band1(a_plus * a_minus.shifted(-1) * q.conj().shifted(-1) * e_mf,
                  -(a_minus * a_minus * p) + a_plus * a_plus * p.shifted(-1),
                  a_minus * a_plus.shifted(1) * q * e_pf.shifted(1)),
            0.5)};
  return blocks;
}

BandOperator gamma_eigenbasis(const WalkParameters& params,
                              const TwoPhaseSequence& theta) {
  const TwoPhaseSequence p_plus = real_sqrt_one_plus(params.p, +1.0);
  const TwoPhaseSequence p_minus = real_sqrt_one_plus(params.p, -1.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  BandOperator diag(2, 1);
  diag.set_coeff(0, 0, 0, TwoPhaseSequence::constant(1.0));
  diag.set_coeff(1, 1, -1, exp_i(theta, -1.0).shifted(-1));

  const BandOperator rot = BandOperator::multiplication(
      {{Complex(inv_sqrt2) * p_plus, Complex(-inv_sqrt2) * p_minus},
       {Complex(inv_sqrt2) * p_minus, Complex(inv_sqrt2) * p_plus}});
  return compose(diag, rot);
}

BandOperator gamma_prime_eigenbasis(const WalkParameters& params,
                                    const TwoPhaseSequence& phi) {
  const TwoPhaseSequence a_plus = real_sqrt_one_plus(params.a, +1.0);
  const TwoPhaseSequence a_minus = real_sqrt_one_plus(params.a, -1.0);
  const TwoPhaseSequence e_pf = exp_i(phi, +1.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return BandOperator::multiplication(
      {{Complex(inv_sqrt2) * a_plus, Complex(-inv_sqrt2) * a_minus},
       {Complex(inv_sqrt2) * (e_pf * a_minus),
        Complex(inv_sqrt2) * (e_pf * a_plus)}});
}

namespace {

/// Keep angle(x) on sites governed by an end where the gate value equals
/// target; zero elsewhere.
TwoPhaseSequence gate_by_end(const TwoPhaseSequence& angle, double gate_neg,
                             double gate_pos, double target) {
  const bool keep_neg = gate_neg == target;
  const bool keep_pos = gate_pos == target;
  std::map<Site, Complex> ov;
  for (const auto& [x, v] : angle.overrides()) {
    const bool keep = x >= 0 ? keep_pos : keep_neg;
    ov.emplace(x, keep ? v : Complex{});
  }
  return {keep_neg ? angle.limit_neg() : Complex{},
          keep_pos ? angle.limit_pos() : Complex{}, std::move(ov)};
}

}  // namespace

PhaseRepair phase_repair(const WalkParameters& params) {
  validate(params);
  const TwoPhaseSequence theta = pointwise_theta(params);
  const TwoPhaseSequence phi = pointwise_phi(params);
  const double p_neg = params.p_limit(End::neg);
  const double p_pos = params.p_limit(End::pos);
  const double a_neg = params.a_limit(End::neg);
  const double a_pos = params.a_limit(End::pos);
  return {gate_by_end(theta, p_neg, p_pos, +1.0),
          gate_by_end(theta, p_neg, p_pos, -1.0),
          gate_by_end(phi, a_neg, a_pos, +1.0),
          gate_by_end(phi, a_neg, a_pos, -1.0)};
}

RepairedBlocks repaired_blocks(const WalkParameters& params) {
  const ChiralBlocks blocks =
      chiral_blocks(params, pointwise_theta(params), pointwise_phi(params));
  const PhaseRepair pr = phase_repair(params);
  const BandOperator a_eps =
      compose(mult1(exp_i(pr.theta_plus, -1.0)),
              compose(blocks.q_eps0, mult1(exp_i(pr.theta_minus, +1.0))));
  const BandOperator a_gam =
      compose(mult1(exp_i(pr.phi_plus, +1.0)),
              compose(blocks.q_gam0, mult1(exp_i(pr.phi_minus, -1.0))));
  return {a_eps, a_gam};
}

WalkSymbols f_symbols(const WalkParameters& params) {
  validate(params);
  const AsymptoticPhases ph = asymptotic_phases(params);
  WalkSymbols out;
  for (End end : {End::neg, End::pos}) {
    const double p = params.p_limit(end);
    const double a = params.a_limit(end);
    const Complex q = params.q_limit(end);
    const Complex b = params.b_limit(end);
    const Complex eit = std::polar(1.0, ph.theta(end));
    const Complex eif = std::polar(1.0, ph.phi(end));

    LaurentPoly f_eps;  // (-2i f_eps) / (-2i)
    f_eps.add_coeff(1, (p + 1.0) * b * eit / (-2.0 * kI));
    f_eps.add_coeff(-1, (p - 1.0) * std::conj(b) / eit / (-2.0 * kI));
    f_eps.add_coeff(0, -2.0 * std::abs(q) * a / (-2.0 * kI));

    LaurentPoly f_gam;  // (2i f_gam) / (2i)
    f_gam.add_coeff(-1, (a + 1.0) * std::conj(q) / eif / (2.0 * kI));
    f_gam.add_coeff(1, (a - 1.0) * q * eif / (2.0 * kI));
    f_gam.add_coeff(0, -2.0 * std::abs(b) * p / (2.0 * kI));

    if (end == End::neg) {
      out.f_eps_neg = std::move(f_eps);
      out.f_gam_neg = std::move(f_gam);
    } else {
      out.f_eps_pos = std::move(f_eps);
      out.f_gam_pos = std::move(f_gam);
    }
  }
  return out;
}

namespace {

/// min/max over c in [-1, 1] of (A c - B)^2 + C (1 - c^2).
std::pair<double, double> quad_range(double A, double B, double C) {
  auto phi = [&](double c) {
    const double d = A * c - B;
    return d * d + C * (1.0 - c * c);
  };
  double lo = std::min(phi(1.0), phi(-1.0));
  double hi = std::max(phi(1.0), phi(-1.0));
  const double curvature = A * A - C;
  if (curvature != 0.0) {
    const double c_star = A * B / curvature;
    if (c_star > -1.0 && c_star < 1.0) {
      const double v = phi(c_star);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return {std::max(0.0, lo), std::max(0.0, hi)};
}

}  // namespace

WindingResult ellipse_winding(double a1, Complex b1, double a2, Complex b2,
                              double theta1) {
  auto check_norm = [](double alpha, Complex beta, const char* which) {
    if (std::abs(alpha * alpha + std::norm(beta) - 1.0) > kWalkConstraintTol) {
      std::ostringstream msg;
      msg << "ellipse winding: pair " << which << " is not unit-norm";
      throw std::invalid_argument(msg.str());
    }
  };
  check_norm(a1, b1, "1");
  check_norm(a2, b2, "2");
  if (b1 != Complex{} &&
      std::abs(b1 - std::abs(b1) * std::polar(1.0, theta1)) >
          kWalkConstraintTol * (1.0 + std::abs(b1)))
    throw std::invalid_argument(
        "ellipse winding: theta1 is not a phase of b1");

  WindingResult out;
  const auto [lo2, hi2] = quad_range(std::abs(b2) * a1, std::abs(b1) * a2,
                                     std::norm(b2));
  out.min_modulus = std::sqrt(lo2);
  if (std::abs(a1) == std::abs(a2)) return out;  // vanishing on the circle
  out.nowhere_vanishing = true;
  out.winding = std::abs(a1) > std::abs(a2) ? sgn1(a1) : 0;
  return out;
}

std::string to_string(EndRegime r) {
  switch (r) {
    case EndRegime::p_below_a:
      return "|p| < |a|";
    case EndRegime::p_above_a:
      return "|p| > |a|";
    case EndRegime::degenerate:
      return "|p| = |a|";
  }
  return "?";
}

namespace {

EndRegime regime_at(const WalkParameters& params, End end) {
  const double p = std::abs(params.p_limit(end));
  const double a = std::abs(params.a_limit(end));
  if (p < a) return EndRegime::p_below_a;
  if (p > a) return EndRegime::p_above_a;
  return EndRegime::degenerate;
}

int require_winding(const LaurentPoly& f, const char* name) {
  const WindingResult w = winding(f);
  if (!w.nowhere_vanishing) {
    std::ostringstream msg;
    msg << "walk index: " << name
        << " vanishes on the circle although the closed form says Fredholm "
           "(min sampled modulus "
        << w.min_modulus << ")";
    throw DiscrepancyError(msg.str());
  }
  return *w.winding;
}

}  // namespace

WittenReport witten_indices(const WalkParameters& params) {
  validate(params);
  WittenReport report;
  report.regime_neg = regime_at(params, End::neg);
  report.regime_pos = regime_at(params, End::pos);
  if (report.regime_neg == EndRegime::degenerate ||
      report.regime_pos == EndRegime::degenerate)
    return report;
  report.fredholm = true;

  const bool above_neg = report.regime_neg == EndRegime::p_above_a;
  const bool above_pos = report.regime_pos == EndRegime::p_above_a;
  const int sp_neg = sgn1(params.p_limit(End::neg));
  const int sp_pos = sgn1(params.p_limit(End::pos));
  const int sa_neg = sgn1(params.a_limit(End::neg));
  const int sa_pos = sgn1(params.a_limit(End::pos));

  // Closed-form case table over the four sign regimes.
  int table_gg = 0, table_gpg = 0;
  if (!above_neg && !above_pos) {
    table_gg = 0;
    table_gpg = -sa_pos + sa_neg;
  } else if (!above_neg && above_pos) {
    table_gg = +sp_pos;
    table_gpg = +sa_neg;
  } else if (above_neg && !above_pos) {
    table_gg = -sp_neg;
    table_gpg = -sa_pos;
  } else {
    table_gg = +sp_pos - sp_neg;
    table_gpg = 0;
  }

  // Independent route: windings of the repaired-block symbols.
  const WalkSymbols fs = f_symbols(params);
  const int w_eps_neg = require_winding(fs.f_eps_neg, "f_eps(-inf)");
  const int w_eps_pos = require_winding(fs.f_eps_pos, "f_eps(+inf)");
  const int w_gam_neg = require_winding(fs.f_gam_neg, "f_gam(-inf)");
  const int w_gam_pos = require_winding(fs.f_gam_pos, "f_gam(+inf)");
  const int eng_gg = w_eps_pos - w_eps_neg;
  const int eng_gpg = w_gam_pos - w_gam_neg;

  // Third route per end: the closed-form ellipse winding. For f_gam the
  // roles of the two pairs swap and the orientation flips.
  const AsymptoticPhases ph = asymptotic_phases(params);
  for (End end : {End::neg, End::pos}) {
    const WindingResult we =
        ellipse_winding(params.p_limit(end), params.q_limit(end),
                        params.a_limit(end), params.b_limit(end),
                        ph.theta(end));
    const WindingResult wg =
        ellipse_winding(params.a_limit(end), params.b_limit(end),
                        params.p_limit(end), params.q_limit(end),
                        ph.phi(end));
    const int w_eps = end == End::neg ? w_eps_neg : w_eps_pos;
    const int w_gam = end == End::neg ? w_gam_neg : w_gam_pos;
    if (!we.nowhere_vanishing || *we.winding != w_eps ||
        !wg.nowhere_vanishing || w_gam != -*wg.winding)
      throw DiscrepancyError(
          "walk index: ellipse closed form and winding engine disagree");
  }

  if (table_gg != eng_gg || table_gpg != eng_gpg) {
    std::ostringstream msg;
    msg << "walk index: case table gives (" << table_gg << ", " << table_gpg
        << ") but symbol windings give (" << eng_gg << ", " << eng_gpg << ")";
    throw DiscrepancyError(msg.str());
  }

  report.ind_gamma_gamma_prime = table_gg;
  report.ind_gamma_prime_gamma = table_gpg;
  const HalfInteger plus{table_gg + table_gpg};
  const HalfInteger minus{table_gg - table_gpg};
  if (!plus.integral() || !minus.integral())
    throw DiscrepancyError("walk index: half-indices are not integral");

  // Cross-check the combined indices against their own closed form.
  int twice_plus = 0, twice_minus = 0;
  if (!above_neg && !above_pos) {
    twice_plus = -sa_pos + sa_neg;
    twice_minus = +sa_pos - sa_neg;
  } else if (!above_neg && above_pos) {
    twice_plus = sp_pos + sa_neg;
    twice_minus = sp_pos - sa_neg;
  } else if (above_neg && !above_pos) {
    twice_plus = -sp_neg - sa_pos;
    twice_minus = -sp_neg + sa_pos;
  } else {
    twice_plus = sp_pos - sp_neg;
    twice_minus = sp_pos - sp_neg;
  }
  if (plus.twice != twice_plus || minus.twice != twice_minus)
    throw DiscrepancyError(
        "walk index: combined indices disagree with their case table");

  report.ind_plus = plus;
  report.ind_minus = minus;
  return report;
}

CircularBandSet spectrum_U(const WalkParameters& params, int verify_samples) {
  const CircularBandSet bands = walk_spectrum_bands(params);
  const SpectrumCloud cloud =
      essential_spectrum(build_evolution(params), verify_samples);
  for (End end : {End::neg, End::pos}) {
    const CircularBand& band = bands.at(end);
    for (const SpectrumSample& sample : cloud.at(end))
      for (Complex ev : sample.eigenvalues) {
        if (std::abs(std::abs(ev) - 1.0) > 1e-10)
          throw DiscrepancyError(
              "walk spectrum: sampled eigenvalue left the unit circle");
        if (!band.contains_re(ev.real(), 1e-9))
          throw DiscrepancyError(
              "walk spectrum: sampled eigenvalue escapes the arc bands");
      }
  }
  return bands;
}

QSpectrum spectrum_Q(const WalkParameters& params) {
  validate(params);
  QSpectrum out;
  for (End end : {End::neg, End::pos}) {
    const double p = params.p_limit(end);
    const double a = params.a_limit(end);
    const double qm = std::abs(params.q_limit(end));
    const double bm = std::abs(params.b_limit(end));

    QSpectrum::PerEnd per;
    {
      const auto [lo2, hi2] = quad_range(bm * p, qm * a, bm * bm);
      per.f_eps = {std::sqrt(lo2), std::sqrt(hi2)};
    }
    {
      const auto [lo2, hi2] = quad_range(qm * a, bm * p, qm * qm);
      per.f_gam = {std::sqrt(lo2), std::sqrt(hi2)};
    }
    {
      // Image of the arc under z -> |Im z| = sqrt(1 - (Re z)^2).
      const double lo = std::max(-1.0, p * a - qm * bm);
      const double hi = std::min(1.0, p * a + qm * bm);
      double absmax = std::max(std::abs(lo), std::abs(hi));
      // |p| = |a| forces |pa| + |qb| = 1; pinning the edge keeps the
      // square root well-conditioned there.
      if (regime_at(params, end) == EndRegime::degenerate) absmax = 1.0;
      const double absmin = (lo <= 0.0 && hi >= 0.0)
                                ? 0.0
                                : std::min(std::abs(lo), std::abs(hi));
      per.mapped = {std::sqrt(std::max(0.0, 1.0 - absmax * absmax)),
                    std::sqrt(std::max(0.0, 1.0 - absmin * absmin))};
    }
    auto close = [](const Interval& u, const Interval& v) {
      return std::abs(u.lo - v.lo) <= 1e-9 && std::abs(u.hi - v.hi) <= 1e-9;
    };
    if (!close(per.f_eps, per.f_gam) || !close(per.f_eps, per.mapped)) {
      std::ostringstream msg;
      msg << "imaginary-part spectrum: routes disagree at "
          << (end == End::neg ? "-inf" : "+inf") << ": f_eps [" << per.f_eps.lo
          << ", " << per.f_eps.hi << "], f_gam [" << per.f_gam.lo << ", "
          << per.f_gam.hi << "], mapped [" << per.mapped.lo << ", "
          << per.mapped.hi << "]";
      throw DiscrepancyError(msg.str());
    }
    (end == End::neg ? out.neg : out.pos) = per;
  }
  out.contains_zero = regime_at(params, End::neg) == EndRegime::degenerate ||
                      regime_at(params, End::pos) == EndRegime::degenerate;

  // Merge the two per-end intervals (symmetric pairs are implied).
  Interval a = out.neg.f_eps, b = out.pos.f_eps;
  if (a.lo > b.lo) std::swap(a, b);
  if (b.lo <= a.hi)
    out.positive_part = {{a.lo, std::max(a.hi, b.hi)}};
  else
    out.positive_part = {a, b};
  return out;
}

}  // namespace invariants
