#include "invariants/kernels.hpp"

#if defined(INVARIANTS_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>
#include <limits>

namespace invariants::kernels::detail {

namespace {

// Complex multiply-accumulate on 4 lanes: (ar, ai) := (ar, ai)*(wr, wi) + c.
inline void cmul_add(__m256d& ar, __m256d& ai, __m256d wr, __m256d wi,
                     __m256d cr, __m256d ci) {
  const __m256d tr =
      _mm256_add_pd(_mm256_fmsub_pd(ar, wr, _mm256_mul_pd(ai, wi)), cr);
  ai = _mm256_add_pd(_mm256_fmadd_pd(ar, wi, _mm256_mul_pd(ai, wr)), ci);
  ar = tr;
}

}  // namespace

void eval_on_circle_avx2(const double* coeff_re, const double* coeff_im,
                         std::size_t ncoeff, long deg_min,
                         const double* angles, std::size_t nangles,
                         double* out_re, double* out_im) {
  const double dmin = static_cast<double>(deg_min);
  std::size_t a = 0;
  for (; a + 4 <= nangles; a += 4) {
    alignas(32) double wr4[4], wi4[4], lr4[4], li4[4];
    for (int l = 0; l < 4; ++l) {
      const double t = angles[a + l];
      wr4[l] = std::cos(t);
      wi4[l] = std::sin(t);
      const double lt = dmin * t;
      lr4[l] = std::cos(lt);
      li4[l] = std::sin(lt);
    }
    const __m256d wr = _mm256_load_pd(wr4);
    const __m256d wi = _mm256_load_pd(wi4);
    __m256d ar = _mm256_setzero_pd();
    __m256d ai = _mm256_setzero_pd();
    for (std::size_t m = ncoeff; m-- > 0;) {
      cmul_add(ar, ai, wr, wi, _mm256_set1_pd(coeff_re[m]),
               _mm256_set1_pd(coeff_im[m]));
    }
    const __m256d lr = _mm256_load_pd(lr4);
    const __m256d li = _mm256_load_pd(li4);
    const __m256d rr = _mm256_fmsub_pd(ar, lr, _mm256_mul_pd(ai, li));
    const __m256d ri = _mm256_fmadd_pd(ar, li, _mm256_mul_pd(ai, lr));
    _mm256_storeu_pd(out_re + a, rr);
    _mm256_storeu_pd(out_im + a, ri);
  }
  if (a < nangles)
    eval_on_circle_scalar(coeff_re, coeff_im, ncoeff, deg_min, angles + a,
                          nangles - a, out_re + a, out_im + a);
}

void min_max_abs2_avx2(const double* re, const double* im, std::size_t n,
                       double* min_out, double* max_out) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  std::size_t i = 0;
  if (n >= 4) {
    __m256d vlo = _mm256_set1_pd(lo);
    __m256d vhi = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4) {
      const __m256d r = _mm256_loadu_pd(re + i);
      const __m256d m = _mm256_loadu_pd(im + i);
      const __m256d a2 = _mm256_fmadd_pd(r, r, _mm256_mul_pd(m, m));
      vlo = _mm256_min_pd(vlo, a2);
      vhi = _mm256_max_pd(vhi, a2);
    }
    alignas(32) double tl[4], th[4];
    _mm256_store_pd(tl, vlo);
    _mm256_store_pd(th, vhi);
    for (int l = 0; l < 4; ++l) {
      lo = std::min(lo, tl[l]);
      hi = std::max(hi, th[l]);
    }
  }
  for (; i < n; ++i) {
    const double a2 = re[i] * re[i] + im[i] * im[i];
    lo = std::min(lo, a2);
    hi = std::max(hi, a2);
  }
  *min_out = (n == 0) ? 0.0 : lo;
  *max_out = hi;
}

}  // namespace invariants::kernels::detail

#endif  // INVARIANTS_HAVE_AVX2
