#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "generators.hpp"
#include "lieeq/discrepancy.hpp"
#include "lieeq/error.hpp"

using namespace lieeq;

namespace {

const RootSystemTables& a1() {
  static const auto t = build_tables(GroupId::A1);
  return t;
}
const QuadratureGrid& a1_grid() {
  static const auto g = build_quadrature(a1(), default_resolution(GroupId::A1));
  return g;
}

double semicircle_cdf(double x) {
  x = std::clamp(x, -2.0, 2.0);
  return 0.5 + (x * std::sqrt(4.0 - x * x) / 2.0 + 2.0 * std::asin(x / 2.0)) / (2.0 * kPi);
}

}  // namespace

TEST_CASE("quadrature mass and weights") {
  const auto& g = a1_grid();
  CHECK(std::fabs(g.mass - 1.0) <= 1e-6);
  CHECK(g.M == 2.0);
  for (double w : g.weights) REQUIRE(w >= 0.0);
  CHECK(std::is_sorted(g.pushed.begin(), g.pushed.end()));
  const auto a2 = build_tables(GroupId::A2);
  const auto g2 = build_quadrature(a2, {400, 400});
  CHECK(std::fabs(g2.mass - 1.0) <= 1e-3);
  CHECK_THROWS_AS(build_quadrature(a2, {8, 400}), Error);
  CHECK_THROWS_AS(build_quadrature(a2, {400}), Error);
}

TEST_CASE("mu_box examples and the semicircle law") {
  const auto& g = a1_grid();
  const double top[] = {2.0};
  const double bottom[] = {-2.0};
  const double mid[] = {0.0};
  CHECK(mu_box(g, top) == doctest::Approx(g.mass));
  CHECK(mu_box(g, bottom) <= 1e-9);
  CHECK(mu_box(g, mid) == doctest::Approx(0.5).epsilon(2e-3));
  for (double x = -1.9; x < 2.0; x += 0.1) {
    const double c[] = {x};
    CHECK(std::fabs(mu_box(g, c) - semicircle_cdf(x)) <= 1e-4);
  }
}

TEST_CASE("property: mu_box is monotone along nested corners") {
  testgen::Gen gen(201);
  const auto a2 = build_tables(GroupId::A2);
  const auto g = build_quadrature(a2, {200, 200});
  std::vector<double> c{-3.0, -3.0};
  double prev = mu_box(g, c);
  for (int i = 0; i < 100; ++i) {
    for (auto& v : c) v = std::min(3.0, v + gen.uniform(0.0, 0.12));
    const double cur = mu_box(g, c);
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("star discrepancy examples") {
  const auto& g = a1_grid();
  const CharacterEngine e(a1());
  const auto single = star_discrepancy(g, e, constant_sequence(a1(), 1, TorusPoint({kPi / 2})));
  CHECK(single.d_star == doctest::Approx(0.5).epsilon(2e-3));
  ClassSequence ends;
  ends.group = GroupId::A1;
  ends.points = {TorusPoint({0.0}), TorusPoint({kPi})};
  const auto two = star_discrepancy(g, e, ends);
  CHECK(two.d_star == doctest::Approx(0.5).epsilon(2e-3));
  CHECK(two.n == 2);
}

TEST_CASE("property: bracket and reported fields") {
  const auto& g = a1_grid();
  const CharacterEngine e(a1());
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto rep = star_discrepancy(g, e, sample_haar(a1(), 300, seed));
    CHECK(rep.d_lower <= rep.d_upper);
    CHECK(rep.d_upper == 2.0 * rep.d_star);
    CHECK(rep.d_lower == rep.d_star);
    CHECK(rep.candidates == 301);
    CHECK(rep.quad_error_hint >= std::fabs(rep.mass - 1.0));
  }
  const auto a2 = build_tables(GroupId::A2);
  const CharacterEngine e2(a2);
  const auto g2 = build_quadrature(a2, {128, 128});
  const auto rep = star_discrepancy(g2, e2, sample_haar(a2, 200, 4));
  CHECK(rep.d_upper == 4.0 * rep.d_star);
  CHECK(rep.d_lower <= rep.d_upper);
}

TEST_CASE("property: 1D scan matches an independent sweep") {
  const auto& g = a1_grid();
  const CharacterEngine e(a1());
  for (std::size_t n : {1u, 3u, 10u, 250u, 1000u}) {
    const auto pushed = push_sequence(e, sample_haar(a1(), n, 300 + n));
    std::vector<double> xs;
    for (const auto& p : pushed) xs.push_back(p.x[0]);
    std::sort(xs.begin(), xs.end());
    double sweep = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double c[] = {xs[i]};
      const double H = mu_box(g, c);
      sweep = std::max({sweep, std::fabs(H - static_cast<double>(i + 1) / static_cast<double>(n)),
                        std::fabs(H - static_cast<double>(i) / static_cast<double>(n))});
    }
    const double top[] = {2.0};
    sweep = std::max(sweep, std::fabs(mu_box(g, top) - 1.0));
    CHECK(std::fabs(star_discrepancy(g, pushed).d_star - sweep) <= 1e-12);
  }
}

TEST_CASE("property: 2D scan matches brute force over all candidate corners") {
  testgen::Gen gen(401);
  const auto a2 = build_tables(GroupId::A2);
  const CharacterEngine e(a2);
  const auto g = build_quadrature(a2, {64, 64});
  for (int trial = 0; trial < 3; ++trial) {
    const auto pushed = push_sequence(e, sample_haar(a2, 25, 500 + static_cast<std::uint64_t>(trial)));
    std::vector<double> u0, u1;
    for (const auto& p : pushed) {
      u0.push_back(p.x[0]);
      u1.push_back(p.x[1]);
    }
    u0.push_back(g.M);
    u1.push_back(g.M);
    double best = 0.0;
    const double n = static_cast<double>(pushed.size());
    for (double c0 : u0) {
      for (double c1 : u1) {
        const double c[] = {c0, c1};
        const double H = mu_box(g, c);
        double closed = 0, open = 0;
        for (const auto& p : pushed) {
          closed += (p.x[0] <= c0 && p.x[1] <= c1);
          open += (p.x[0] < c0 && p.x[1] < c1);
        }
        best = std::max({best, std::fabs(closed / n - H), std::fabs(open / n - H)});
      }
    }
    CHECK(std::fabs(star_discrepancy(g, pushed).d_star - best) <= 1e-12);
  }
}

TEST_CASE("candidate cap") {
  const auto a2 = build_tables(GroupId::A2);
  const CharacterEngine e(a2);
  const auto g = build_quadrature(a2, {64, 64});
  const auto seq = sample_haar(a2, 100, 9);
  CHECK_THROWS_AS(star_discrepancy(g, e, seq, 100), Error);
  CHECK_NOTHROW(star_discrepancy(g, e, seq, 101 * 101));
  ClassSequence other = seq;
  other.group = GroupId::C2;
  CHECK_THROWS_AS(star_discrepancy(g, e, other), Error);
}

TEST_CASE("Haar samples have small discrepancy") {
  const CharacterEngine e(a1());
  const auto rep = star_discrepancy(a1_grid(), e, sample_haar(a1(), 10000, 42));
  CHECK(rep.d_star <= 0.03);
}

TEST_CASE("property: doubling the quadrature resolution barely moves d_star") {
  const auto a2 = build_tables(GroupId::A2);
  const CharacterEngine e(a2);
  const auto seq = sample_haar(a2, 1000, 17);
  const auto coarse = build_quadrature(a2, {200, 200});
  const auto fine = build_quadrature(a2, {400, 400});
  CHECK(std::fabs(star_discrepancy(coarse, e, seq).d_star - star_discrepancy(fine, e, seq).d_star) < 5e-3);

  const CharacterEngine e1(a1());
  const auto s1 = sample_haar(a1(), 1000, 18);
  const auto c1 = build_quadrature(a1(), {50000});
  CHECK(std::fabs(star_discrepancy(c1, e1, s1).d_star - star_discrepancy(a1_grid(), e1, s1).d_star) < 5e-3);
}
