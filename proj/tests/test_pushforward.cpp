#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "generators.hpp"
#include "lieeq/error.hpp"
#include "lieeq/pushforward.hpp"

using namespace lieeq;

namespace {
TorusPoint T(std::vector<double> th) { return TorusPoint(std::move(th)); }

double torus_gap(const TorusPoint& a, const TorusPoint& b) {
  double m = 0.0;
  for (int i = 0; i < a.rank(); ++i) {
    const double d = std::fabs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]);
    m = std::max(m, std::min(d, kTwoPi - d));
  }
  return m;
}
}  // namespace

TEST_CASE("push_point examples") {
  const auto a1 = build_tables(GroupId::A1);
  CHECK(std::abs(push_point(a1, T({kPi / 2})).x[0]) < 1e-12);
  CHECK(push_point(a1, T({0.0})).x[0] == doctest::Approx(2.0));
  const auto a2 = build_tables(GroupId::A2);
  const auto x = push_point(a2, T({0.0, 0.0})).x;
  REQUIRE(x.size() == 2);
  CHECK(x[0] == doctest::Approx(3.0));
  CHECK(std::abs(x[1]) < 1e-12);
}

TEST_CASE("A2 coordinates are Re and Im of the lower-index fundamental character") {
  const auto a2 = build_tables(GroupId::A2);
  const CharacterEngine e(a2);
  const TorusPoint p({0.7, 2.3});
  const auto chi = e.value(Weight{{1, 0}}, p).value;
  const auto x = push_point(e, p).x;
  CHECK(x[0] == doctest::Approx(chi.real()));
  CHECK(x[1] == doctest::Approx(chi.imag()));
}

TEST_CASE("density examples") {
  const auto a1 = build_tables(GroupId::A1);
  CHECK(density_F(a1, T({kPi / 2})) == doctest::Approx(1.0 / kPi));
  CHECK(density_F(a1, T({0.0})) == 0.0);
  const auto a2 = build_tables(GroupId::A2);
  CHECK(density_F(a2, T({0.0, 0.0})) == 0.0);
  CHECK(density_sup_bound(a1) == doctest::Approx(1.0 / kPi));
  CHECK(density_sup_bound(a2) == doctest::Approx(4.0 / (kPi * kPi)));
  CHECK(density_sup_bound(build_tables(GroupId::C2)) == doctest::Approx(4.0 / (kPi * kPi)));
}

TEST_CASE("Jacobian examples") {
  const auto a1 = build_tables(GroupId::A1);
  const CharacterEngine e1(a1);
  CHECK(numeric_jacobian(e1, T({kPi / 2})) == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(numeric_jacobian(e1, T({kPi / 3})) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-8));
  const auto a2 = build_tables(GroupId::A2);
  const CharacterEngine e2(a2);
  // (1.0, 2.0) lies on the wall 2 theta1 - theta2 = 0 in these coordinates.
  CHECK_THROWS_AS(numeric_jacobian(e2, T({1.0, 2.0})), Error);
  const TorusPoint p({1.0, 2.5});
  CHECK(numeric_jacobian(e2, p) == doctest::Approx(jacobian_closed_form(a2, p)).epsilon(1e-4));
  CHECK(jacobian_closed_form(a2, p) == doctest::Approx(0.5 * std::abs(weyl_denominator(a2, p))));
  CHECK_THROWS_AS(numeric_jacobian(e1, T({0.0})), Error);
}

TEST_CASE("determinant helper") {
  CHECK(determinant({2.0, 1.0, 1.0, 3.0}, 2) == doctest::Approx(5.0));
  CHECK(determinant({0.0, 1.0, 1.0, 0.0}, 2) == doctest::Approx(-1.0));
  CHECK(determinant({1, 2, 3, 4, 5, 6, 7, 8, 10}, 3) == doctest::Approx(-3.0));
}

TEST_CASE("property: Jacobian identity on rank 3") {
  testgen::Gen gen(51);
  for (GroupId g : {GroupId::A3, GroupId::B3, GroupId::C3}) {
    const auto t = build_tables(g);
    const CharacterEngine e(t);
    int done = 0;
    while (done < 10) {
      const TorusPoint p = gen.torus(3);
      if (wall_distance(t, p) < 0.1) continue;
      const double ref = jacobian_closed_form(t, p);
      CHECK(std::fabs(numeric_jacobian(e, p) - ref) <= 1e-4 * ref);
      ++done;
    }
  }
}

TEST_CASE("property: range of the pushforward") {
  testgen::Gen gen(61);
  for (GroupId g : all_groups()) {
    const auto t = build_tables(g);
    const CharacterEngine e(t);
    const double M = static_cast<double>(t.M);
    const int n = t.rank == 3 ? 2000 : 10000;
    for (int i = 0; i < n; ++i) {
      for (double v : push_point(e, gen.torus(t.rank)).x) {
        REQUIRE(v >= -M - 1e-9);
        REQUIRE(v <= M + 1e-9);
      }
    }
  }
}

TEST_CASE("property: Weyl-equivalent points share an image") {
  testgen::Gen gen(71);
  for (GroupId g : all_groups()) {
    const auto t = build_tables(g);
    const CharacterEngine e(t);
    for (int i = 0; i < 20; ++i) {
      const TorusPoint p = gen.torus(t.rank);
      const auto base = push_point(e, p).x;
      for (const auto& w : t.weyl) {
        const auto img = push_point(e, act_on_torus(w, p)).x;
        for (std::size_t j = 0; j < base.size(); ++j) CHECK(std::fabs(img[j] - base[j]) <= 1e-9);
      }
    }
  }
}

TEST_CASE("property: injectivity spot-check across distinct orbits") {
  testgen::Gen gen(81);
  for (GroupId g : {GroupId::A1, GroupId::A2, GroupId::C2, GroupId::G2}) {
    const auto t = build_tables(g);
    const CharacterEngine e(t);
    int done = 0;
    while (done < 1000) {
      const TorusPoint p = gen.torus(t.rank);
      const TorusPoint q = gen.torus(t.rank);
      double orbit_gap = 1e300;
      for (const auto& w : t.weyl) orbit_gap = std::min(orbit_gap, torus_gap(act_on_torus(w, p), q));
      if (orbit_gap < 1e-6) continue;
      const auto a = push_point(e, p).x;
      const auto b = push_point(e, q).x;
      double sup = 0.0;
      for (std::size_t j = 0; j < a.size(); ++j) sup = std::max(sup, std::fabs(a[j] - b[j]));
      CHECK(sup > 1e-9);
      ++done;
    }
  }
}

TEST_CASE("property: density is the Jacobian scaled") {
  testgen::Gen gen(91);
  for (GroupId g : all_groups()) {
    const auto t = build_tables(g);
    for (int i = 0; i < 20; ++i) {
      const TorusPoint p = gen.torus(t.rank);
      const double scale = std::ldexp(1.0, 2 * t.r2) / std::pow(kTwoPi, t.rank);
      CHECK(density_F(t, p) == doctest::Approx(scale * jacobian_closed_form(t, p)));
    }
  }
}
