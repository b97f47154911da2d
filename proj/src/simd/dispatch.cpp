#include <atomic>
#include <cstdlib>
#include <string>

#include "lieeq/error.hpp"
#include "lieeq/simd/kernels.hpp"

namespace lieeq::simd {

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar: return true;
    case Backend::Avx2:
#if defined(LIEEQ_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(LIEEQ_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels(Backend b) {
  if (!backend_available(b)) {
    throw Error(ErrorKind::InvalidArgument, "SIMD backend '" + std::string(to_string(b)) + "' is not available");
  }
  switch (b) {
#if defined(LIEEQ_HAVE_AVX2)
    case Backend::Avx2: return detail::avx2_table;
#endif
#if defined(LIEEQ_HAVE_NEON)
    case Backend::Neon: return detail::neon_table;
#endif
    default: return detail::scalar_table;
  }
}

namespace {

Backend best_backend() {
  if (const char* env = std::getenv("LIEEQ_SIMD")) {
    const std::string want(env);
    for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
      if (want == to_string(b) && backend_available(b)) return b;
    }
  }
  if (backend_available(Backend::Avx2)) return Backend::Avx2;
  if (backend_available(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

std::atomic<const KernelTable*>& active_table() {
  static std::atomic<const KernelTable*> table{&kernels(best_backend())};
  return table;
}

}  // namespace

Backend active_backend() { return active_table().load()->backend; }

void set_backend(Backend b) { active_table().store(&kernels(b)); }

ArgMax max_abs_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "max_abs_diff: length mismatch");
  return active_table().load()->max_abs_diff(a.data(), b.data(), a.size());
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "dot: length mismatch");
  return active_table().load()->dot(a.data(), b.data(), a.size());
}

void counts_to_fraction(std::span<const std::uint32_t> counts, double scale, std::span<double> out) {
  if (counts.size() != out.size()) throw Error(ErrorKind::InvalidArgument, "counts_to_fraction: length mismatch");
  active_table().load()->counts_to_fraction(counts.data(), scale, out.data(), counts.size());
}

}  // namespace lieeq::simd
