#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <vector>

#include "lieeq/error.hpp"
#include "lieeq/parallel.hpp"
#include "lieeq/simd/kernels.hpp"

using namespace lieeq;
using namespace lieeq::simd;

namespace {

std::vector<Backend> available() {
  std::vector<Backend> out;
  for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
    if (backend_available(b)) out.push_back(b);
  }
  return out;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("scalar backend is always present") {
  CHECK(backend_available(Backend::Scalar));
  CHECK(kernels(Backend::Scalar).backend == Backend::Scalar);
  CHECK(to_string(Backend::Avx2) == "avx2");
}

TEST_CASE("max_abs_diff edge cases") {
  for (Backend b : available()) {
    CAPTURE(to_string(b));
    const auto& k = kernels(b);
    const auto empty = k.max_abs_diff(nullptr, nullptr, 0);
    CHECK(empty.value == 0.0);
    CHECK(empty.index == 0);
    // Ties resolve to the first index, including across vector lanes.
    std::vector<double> a(37, 1.0), z(37, 0.0);
    a[5] = 3.0;
    a[9] = -3.0;
    a[30] = 3.0;
    const auto r = k.max_abs_diff(a.data(), z.data(), a.size());
    CHECK(r.value == 3.0);
    CHECK(r.index == 5);
    std::vector<double> tail(7, 0.0);
    tail[6] = 1.0;
    CHECK(k.max_abs_diff(tail.data(), z.data(), tail.size()).index == 6);
  }
}

TEST_CASE("property: vector kernels match the scalar reference") {
  std::mt19937_64 rng(901);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> ucount(0, 100000);
  const auto& ref = kernels(Backend::Scalar);
  for (Backend b : available()) {
    CAPTURE(to_string(b));
    const auto& k = kernels(b);
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 17u, 63u, 64u, 65u, 1000u, 4099u}) {
      std::vector<double> a(n), c(n);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = u(rng);
        // Coarse values force ties.
        c[i] = std::round(u(rng) * 4.0) / 4.0;
      }
      const auto r0 = ref.max_abs_diff(a.data(), c.data(), n);
      const auto r1 = k.max_abs_diff(a.data(), c.data(), n);
      CHECK(same_bits(r0.value, r1.value));
      CHECK(r0.index == r1.index);
      std::vector<double> t1(n, 0.0), t2(n, 0.0);
      const auto q0 = ref.max_abs_diff(t1.data(), c.data(), n);
      const auto q1 = k.max_abs_diff(t1.data(), c.data(), n);
      CHECK(q0.index == q1.index);
      CHECK(same_bits(q0.value, q1.value));

      std::vector<std::uint32_t> counts(n);
      for (auto& v : counts) v = ucount(rng);
      std::vector<double> o0(n), o1(n);
      ref.counts_to_fraction(counts.data(), 1.0 / 4099.0, o0.data(), n);
      k.counts_to_fraction(counts.data(), 1.0 / 4099.0, o1.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(same_bits(o0[i], o1[i]));

      const double d0 = ref.dot(a.data(), c.data(), n);
      const double d1 = k.dot(a.data(), c.data(), n);
      double mag = 0.0;
      for (std::size_t i = 0; i < n; ++i) mag += std::fabs(a[i] * c[i]);
      CHECK(std::fabs(d0 - d1) <= 1e-14 * std::max(1.0, mag));
    }
  }
}

TEST_CASE("backend override") {
  const Backend before = active_backend();
  set_backend(Backend::Scalar);
  CHECK(active_backend() == Backend::Scalar);
  const double a[] = {1.0, -4.0, 2.0};
  const double b[] = {0.0, 0.0, 0.0};
  CHECK(max_abs_diff(a, b).index == 1);
  CHECK(dot(a, a) == 21.0);
  set_backend(before);
  if (!backend_available(Backend::Neon)) CHECK_THROWS_AS(kernels(Backend::Neon), Error);
}

TEST_CASE("parallel_for covers the range once and propagates errors") {
  for (unsigned threads : {1u, 2u, 4u}) {
    set_max_threads(threads);
    std::vector<int> hits(10007, 0);
    parallel_for(hits.size(), [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) ++hits[i];
    }, 100);
    for (int h : hits) REQUIRE(h == 1);
    CHECK_THROWS_AS(parallel_for(5000, [](std::size_t b, std::size_t) {
      if (b == 0) throw Error(ErrorKind::InvalidArgument, "boom");
    }, 10), Error);
  }
  set_max_threads(0);
  parallel_for(0, [](std::size_t, std::size_t) { FAIL("called on empty range"); });
}
