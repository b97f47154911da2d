// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <cmath>

#include "lieeq/simd/kernels.hpp"

namespace lieeq::simd {

namespace {

ArgMax max_abs_diff_avx2(const double* a, const double* b, std::size_t n) {
  if (n == 0) return {0.0, 0};
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d vmax = _mm256_set1_pd(-1.0);
  __m256d vidx = _mm256_setzero_pd();
  __m256d cur = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  const __m256d step = _mm256_set1_pd(4.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_andnot_pd(sign_mask, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    const __m256d gt = _mm256_cmp_pd(d, vmax, _CMP_GT_OQ);
    vmax = _mm256_blendv_pd(vmax, d, gt);
    vidx = _mm256_blendv_pd(vidx, cur, gt);
    cur = _mm256_add_pd(cur, step);
  }
  alignas(32) double lane_max[4];
  alignas(32) double lane_idx[4];
  _mm256_store_pd(lane_max, vmax);
  _mm256_store_pd(lane_idx, vidx);
  ArgMax best{-1.0, 0};
  for (int l = 0; l < 4; ++l) {
    const auto idx = static_cast<std::size_t>(lane_idx[l]);
    if (lane_max[l] > best.value || (lane_max[l] == best.value && lane_max[l] >= 0.0 && idx < best.index)) {
      best = {lane_max[l], idx};
    }
  }
  for (; i < n; ++i) {
    const double d = std::fabs(a[i] - b[i]);
    if (d > best.value) best = {d, i};
  }
  return best;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void counts_to_fraction_avx2(const std::uint32_t* counts, double scale, double* out, std::size_t n) {
  const __m256d s = _mm256_set1_pd(scale);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i c = _mm_loadu_si128(reinterpret_cast<const __m128i*>(counts + i));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_cvtepi32_pd(c), s));
  }
  for (; i < n; ++i) out[i] = static_cast<double>(counts[i]) * scale;
}

}  // namespace

namespace detail {
const KernelTable avx2_table{Backend::Avx2, max_abs_diff_avx2, dot_avx2, counts_to_fraction_avx2};
}  // namespace detail

}  // namespace lieeq::simd
