#include <array>
#include <cstdlib>
#include <cstring>

#include "invariants/kernels.hpp"

namespace invariants::kernels {

namespace {

constexpr Lane kScalar{"scalar", detail::eval_on_circle_scalar,
                       detail::min_max_abs2_scalar};

#if defined(INVARIANTS_HAVE_AVX2)
constexpr Lane kAvx2{"avx2", detail::eval_on_circle_avx2,
                     detail::min_max_abs2_avx2};

bool host_has_avx2() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const std::array<Lane, 2>& lane_table() {
  static const std::array<Lane, 2> all{kScalar, kAvx2};
  static const std::array<Lane, 2> scalar_only{kScalar, kScalar};
  // Expose the AVX2 lane only when the host can actually run it.
  return host_has_avx2() ? all : scalar_only;
}

std::size_t lane_table_size() { return host_has_avx2() ? 2 : 1; }
#else
const std::array<Lane, 1>& lane_table() {
  static const std::array<Lane, 1> all{kScalar};
  return all;
}

std::size_t lane_table_size() { return 1; }
#endif

const Lane& pick_lane() {
  const auto table = std::span<const Lane>(lane_table().data(),
                                           lane_table_size());
  if (const char* want = std::getenv("INVARIANTS_SIMD")) {
    for (const Lane& lane : table)
      if (std::strcmp(lane.name, want) == 0) return lane;
    // Unknown or unsupported request: fall back to the reference lane.
    return table[0];
  }
  return table[table.size() - 1];
}

}  // namespace

std::span<const Lane> lanes() {
  return {lane_table().data(), lane_table_size()};
}

const Lane& active_lane() {
  static const Lane& lane = pick_lane();
  return lane;
}

void eval_on_circle(const double* coeff_re, const double* coeff_im,
                    std::size_t ncoeff, long deg_min, const double* angles,
                    std::size_t nangles, double* out_re, double* out_im) {
  active_lane().eval_on_circle(coeff_re, coeff_im, ncoeff, deg_min, angles,
                               nangles, out_re, out_im);
}

void min_max_abs2(const double* re, const double* im, std::size_t n,
                  double* min_out, double* max_out) {
  active_lane().min_max_abs2(re, im, n, min_out, max_out);
}

}  // namespace invariants::kernels
