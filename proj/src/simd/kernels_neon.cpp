#include <arm_neon.h>

#include <cmath>

#include "lieeq/simd/kernels.hpp"

namespace lieeq::simd {

namespace {

ArgMax max_abs_diff_neon(const double* a, const double* b, std::size_t n) {
  if (n == 0) return {0.0, 0};
  float64x2_t vmax = vdupq_n_f64(-1.0);
  float64x2_t vidx = vdupq_n_f64(0.0);
  const double start[2] = {0.0, 1.0};
  float64x2_t cur = vld1q_f64(start);
  const float64x2_t step = vdupq_n_f64(2.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vabsq_f64(vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    const uint64x2_t gt = vcgtq_f64(d, vmax);
    vmax = vbslq_f64(gt, d, vmax);
    vidx = vbslq_f64(gt, cur, vidx);
    cur = vaddq_f64(cur, step);
  }
  ArgMax best{-1.0, 0};
  for (int l = 0; l < 2; ++l) {
    const double m = l == 0 ? vgetq_lane_f64(vmax, 0) : vgetq_lane_f64(vmax, 1);
    const auto idx = static_cast<std::size_t>(l == 0 ? vgetq_lane_f64(vidx, 0) : vgetq_lane_f64(vidx, 1));
    if (m > best.value || (m == best.value && idx < best.index)) best = {m, idx};
  }
  for (; i < n; ++i) {
    const double d = std::fabs(a[i] - b[i]);
    if (d > best.value) best = {d, i};
  }
  return best;
}

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void counts_to_fraction_neon(const std::uint32_t* counts, double scale, double* out, std::size_t n) {
  const float64x2_t s = vdupq_n_f64(scale);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t c = vmovl_u32(vld1_u32(counts + i));
    vst1q_f64(out + i, vmulq_f64(vcvtq_f64_u64(c), s));
  }
  for (; i < n; ++i) out[i] = static_cast<double>(counts[i]) * scale;
}

}  // namespace

namespace detail {
const KernelTable neon_table{Backend::Neon, max_abs_diff_neon, dot_neon, counts_to_fraction_neon};
}  // namespace detail

}  // namespace lieeq::simd
