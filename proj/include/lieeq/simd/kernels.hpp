#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loops shared by the quadrature and discrepancy code.
// Every kernel has a scalar reference in kernels_scalar.cpp; vector variants
// must match it exactly (max_abs_diff, counts_to_fraction) or to rounding
// (dot). The backend is picked once at startup from the CPU features and can
// be forced with LIEEQ_SIMD=scalar|avx2|neon or set_backend().

namespace lieeq::simd {

enum class Backend { Scalar, Avx2, Neon };

std::string_view to_string(Backend b);

struct ArgMax {
  double value = 0.0;
  std::size_t index = 0;  // first index attaining value
};

struct KernelTable {
  Backend backend;
  ArgMax (*max_abs_diff)(const double* a, const double* b, std::size_t n);
  double (*dot)(const double* a, const double* b, std::size_t n);
  void (*counts_to_fraction)(const std::uint32_t* counts, double scale, double* out, std::size_t n);
};

bool backend_available(Backend b);
/// Table for a specific backend; throws InvalidArgument when not compiled in
/// or not supported by this CPU.
const KernelTable& kernels(Backend b);

Backend active_backend();
void set_backend(Backend b);

/// max_i |a_i - b_i| and its first index. Empty input returns {0, 0}.
ArgMax max_abs_diff(std::span<const double> a, std::span<const double> b);
double dot(std::span<const double> a, std::span<const double> b);
/// out_i = counts_i * scale.
void counts_to_fraction(std::span<const std::uint32_t> counts, double scale, std::span<double> out);

namespace detail {
extern const KernelTable scalar_table;
#if defined(LIEEQ_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
#if defined(LIEEQ_HAVE_NEON)
extern const KernelTable neon_table;
#endif
}  // namespace detail

}  // namespace lieeq::simd
