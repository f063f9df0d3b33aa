#include <cmath>
#include <limits>

#include "invariants/kernels.hpp"

namespace invariants::kernels::detail {

// Reference lane. Per angle: w = e^{it}, Horner from the top coefficient
// down, then one multiplication by e^{i deg_min t} restores the leading
// power. SIMD lanes must match this algorithm so lane outputs agree to
// rounding.
void eval_on_circle_scalar(const double* coeff_re, const double* coeff_im,
                           std::size_t ncoeff, long deg_min,
                           const double* angles, std::size_t nangles,
                           double* out_re, double* out_im) {
  for (std::size_t a = 0; a < nangles; ++a) {
    const double t = angles[a];
    const double wr = std::cos(t);
    const double wi = std::sin(t);
    double ar = 0.0, ai = 0.0;
    for (std::size_t m = ncoeff; m-- > 0;) {
      const double tr = ar * wr - ai * wi + coeff_re[m];
      ai = ar * wi + ai * wr + coeff_im[m];
      ar = tr;
    }
    const double lt = static_cast<double>(deg_min) * t;
    const double lr = std::cos(lt);
    const double li = std::sin(lt);
    out_re[a] = ar * lr - ai * li;
    out_im[a] = ar * li + ai * lr;
  }
}

void min_max_abs2_scalar(const double* re, const double* im, std::size_t n,
                         double* min_out, double* max_out) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a2 = re[i] * re[i] + im[i] * im[i];
    lo = std::min(lo, a2);
    hi = std::max(hi, a2);
  }
  *min_out = (n == 0) ? 0.0 : lo;
  *max_out = hi;
}

}  // namespace invariants::kernels::detail
