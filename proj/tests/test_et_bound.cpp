#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "lieeq/error.hpp"
#include "lieeq/et_bound.hpp"

using namespace lieeq;

namespace {

std::size_t binomial(int n, int k) {
  std::size_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return out;
}

}  // namespace

TEST_CASE("constant C_G") {
  CHECK(constant_CG(build_tables(GroupId::A1)) == doctest::Approx(48000.0 / kPi));
  CHECK(constant_CG(build_tables(GroupId::A2)) == doctest::Approx(138240000.0 / (kPi * kPi)));
  CHECK(constant_CG(build_tables(GroupId::C2)) == doctest::Approx(384000000.0 / (kPi * kPi)));
}

TEST_CASE("degree bound") {
  CHECK(degree_bound(build_tables(GroupId::A1), 3) == 5);
  CHECK(degree_bound(build_tables(GroupId::A2), 1) == 2);
  CHECK(degree_bound(build_tables(GroupId::A2), 5) == 18);
  CHECK(degree_bound(build_tables(GroupId::A3), 2) == 7);
  CHECK_THROWS_AS(degree_bound(build_tables(GroupId::A1), 0), Error);
}

TEST_CASE("character moments") {
  const auto a1 = build_tables(GroupId::A1);
  const CharacterEngine e(a1);
  const auto id = constant_sequence(a1, 10, TorusPoint({0.0}));
  CHECK(character_moment(e, Weight{{1}}, id).real() == doctest::Approx(2.0));
  const auto quarter = constant_sequence(a1, 5, TorusPoint({kPi / 2}));
  CHECK(std::abs(character_moment(e, Weight{{1}}, quarter)) < 1e-12);
  CHECK(character_moment(e, Weight{{2}}, quarter).real() == doctest::Approx(-1.0));
  CHECK(character_moment(e, Weight{{0}}, sample_haar(a1, 50, 3)).real() == doctest::Approx(1.0));
}

TEST_CASE("right-hand side for k = 1 on A1") {
  const auto a1 = build_tables(GroupId::A1);
  const CharacterEngine e(a1);
  const auto seq = sample_haar(a1, 400, 12);
  const auto rep = rhs_bound(e, seq, 1);
  CHECK(rep.degree == 1);
  CHECK(rep.char_count == 1);
  const double m = std::abs(character_moment(e, Weight{{1}}, seq));
  CHECK(rep.moment_sum == doctest::Approx(m));
  CHECK(rep.rhs == doctest::Approx(constant_CG(a1) * (1.0 + m)));
}

TEST_CASE("constant identity sequence maximizes the moment sum") {
  for (GroupId g : {GroupId::A1, GroupId::A2, GroupId::G2}) {
    const auto t = build_tables(g);
    const CharacterEngine e(t);
    const auto id = constant_sequence(t, 4, TorusPoint(std::vector<double>(static_cast<std::size_t>(t.rank), 0.0)));
    for (int k : {1, 2, 3}) {
      const auto rep = rhs_bound(e, id, k);
      double dims = 0.0;
      for (const auto& lam : dominant_weights_up_to(t.rank, degree_bound(t, k), false)) {
        dims += static_cast<double>(weyl_dimension(t, lam));
      }
      CHECK(rep.moment_sum == doctest::Approx(dims).epsilon(1e-9));
    }
  }
}

TEST_CASE("Haar moments are small") {
  const auto a1 = build_tables(GroupId::A1);
  const CharacterEngine e(a1);
  const auto rep = rhs_bound(e, sample_haar(a1, 10000, 99), 3);
  CHECK(rep.char_count == 5);
  CHECK(rep.moment_sum <= 25.0 / std::sqrt(10000.0));
}

TEST_CASE("property: character count and k tradeoff") {
  for (GroupId g : {GroupId::A1, GroupId::A2, GroupId::C2}) {
    const auto t = build_tables(g);
    const CharacterEngine e(t);
    const auto seq = sample_haar(t, 100, 5);
    std::size_t prev_count = 0;
    double prev_sum = -1.0;
    for (int k = 1; k <= 5; ++k) {
      const auto rep = rhs_bound(e, seq, k);
      CHECK(rep.char_count == binomial(rep.degree + t.rank, t.rank) - 1);
      CHECK(rep.char_count >= prev_count);
      CHECK(rep.moment_sum >= prev_sum);
      prev_count = rep.char_count;
      prev_sum = rep.moment_sum;
    }
  }
}

TEST_CASE("property: moments bounded by dimension") {
  testgen::Gen gen(601);
  for (GroupId g : all_groups()) {
    const auto t = build_tables(g);
    const CharacterEngine e(t);
    const auto seq = sample_uniform_torus(t, 40, 8);
    for (int i = 0; i < 20; ++i) {
      const Weight lam = gen.dominant(t.rank, 4);
      CHECK(std::abs(character_moment(e, lam, seq)) <= static_cast<double>(weyl_dimension(t, lam)) + 1e-9);
    }
  }
}

TEST_CASE("verify examples") {
  const auto a1 = build_tables(GroupId::A1);
  const CharacterEngine e1(a1);
  const auto g1 = build_quadrature(e1, default_resolution(GroupId::A1));
  const auto haar = verify(e1, sample_haar(a1, 500, 1), 3, g1);
  CHECK(haar.holds);
  CHECK(haar.has_discrepancy);
  CHECK(haar.rhs / haar.d_upper >= 1e3);
  CHECK(haar.d_upper == haar.discrepancy.d_upper);

  const auto quarter = verify(e1, constant_sequence(a1, 50, TorusPoint({kPi / 2})), 9, g1);
  CHECK(quarter.holds);
  CHECK(quarter.rhs >= constant_CG(a1));

  const auto a2 = build_tables(GroupId::A2);
  const CharacterEngine e2(a2);
  const auto g2 = build_quadrature(e2, {200, 200});
  const auto kr = verify(e2, kronecker_sequence(a2, 500, {kTwoPi * (std::sqrt(2.0) - 1), kTwoPi * (std::sqrt(3.0) - 1)}), 3, g2);
  CHECK(kr.holds);
  CHECK(kr.rhs - kr.d_upper > 0.5 * kr.rhs);
}

TEST_CASE("walls need the raised Freudenthal limit") {
  // Identity points force the weight-sum branch at the full degree bound.
  const auto a2 = build_tables(GroupId::A2);
  const CharacterEngine e(a2);
  const auto rep = rhs_bound(e, constant_sequence(a2, 2, TorusPoint({0.0, 0.0})), 9);
  CHECK(rep.degree == 34);
  CHECK(std::isfinite(rep.rhs));
}
