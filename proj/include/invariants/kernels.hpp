#pragma once

#include <cstddef>
#include <span>

namespace invariants::kernels {

/// Evaluate f(t_j) = sum_{m=0}^{ncoeff-1} c_m e^{i (deg_min + m) t_j} for a
/// batch of angles. Coefficients are split re/im arrays of length ncoeff;
/// results land in out_re/out_im (length nangles).
using EvalOnCircleFn = void (*)(const double* coeff_re, const double* coeff_im,
                                std::size_t ncoeff, long deg_min,
                                const double* angles, std::size_t nangles,
                                double* out_re, double* out_im);

/// Scan |f_j|^2 = re_j^2 + im_j^2 over a batch, returning min and max.
using MinMaxAbs2Fn = void (*)(const double* re, const double* im,
                              std::size_t n, double* min_out, double* max_out);

struct Lane {
  const char* name;
  EvalOnCircleFn eval_on_circle;
  MinMaxAbs2Fn min_max_abs2;
};

/// All lanes compiled into this binary. lanes()[0] is always the scalar
/// reference; further entries are SIMD variants usable on this host.
std::span<const Lane> lanes();

/// The lane picked at startup: the widest supported one, unless the
/// INVARIANTS_SIMD environment variable ("scalar", "avx2") pins a choice.
const Lane& active_lane();

void eval_on_circle(const double* coeff_re, const double* coeff_im,
                    std::size_t ncoeff, long deg_min, const double* angles,
                    std::size_t nangles, double* out_re, double* out_im);

void min_max_abs2(const double* re, const double* im, std::size_t n,
                  double* min_out, double* max_out);

namespace detail {

void eval_on_circle_scalar(const double* coeff_re, const double* coeff_im,
                           std::size_t ncoeff, long deg_min,
                           const double* angles, std::size_t nangles,
                           double* out_re, double* out_im);
void min_max_abs2_scalar(const double* re, const double* im, std::size_t n,
                         double* min_out, double* max_out);

#if defined(INVARIANTS_HAVE_AVX2)
void eval_on_circle_avx2(const double* coeff_re, const double* coeff_im,
                         std::size_t ncoeff, long deg_min,
                         const double* angles, std::size_t nangles,
                         double* out_re, double* out_im);
void min_max_abs2_avx2(const double* re, const double* im, std::size_t n,
                       double* min_out, double* max_out);
#endif

}  // namespace detail

}  // namespace invariants::kernels
