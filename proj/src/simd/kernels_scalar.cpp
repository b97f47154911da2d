#include "lieeq/simd/kernels.hpp"

#include <cmath>

namespace lieeq::simd {

namespace {

ArgMax max_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
  ArgMax best{-1.0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::fabs(a[i] - b[i]);
    if (d > best.value) best = {d, i};
  }
  if (n == 0) best.value = 0.0;
  return best;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void counts_to_fraction_scalar(const std::uint32_t* counts, double scale, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>(counts[i]) * scale;
}

}  // namespace

namespace detail {
const KernelTable scalar_table{Backend::Scalar, max_abs_diff_scalar, dot_scalar, counts_to_fraction_scalar};
}  // namespace detail

}  // namespace lieeq::simd
