#include <doctest.h>

#include <cmath>

#include "lieeq/error.hpp"
#include "lieeq/intop.hpp"

using namespace lieeq;

namespace {

const RootSystemTables& a1() {
  static const auto t = build_tables(GroupId::A1);
  return t;
}

}  // namespace

TEST_CASE("constants give a zero residual") {
  const CharacterEngine e(a1());
  const auto g = build_quadrature(e, default_resolution(GroupId::A1));
  const auto rep = integral_operator_residual(g, e, sample_haar(a1(), 50, 1), RealPoly::constant(1, 1.0));
  CHECK(std::fabs(rep.lhs) <= 1e-12);
  CHECK(std::fabs(rep.rhs) <= 1e-12);
  CHECK(rep.residual <= 1e-12);
}

TEST_CASE("semicircle second moment") {
  const CharacterEngine e(a1());
  const auto g = build_quadrature(e, default_resolution(GroupId::A1));
  const auto seq = constant_sequence(a1(), 1, TorusPoint({kPi / 2}));
  const auto rep = integral_operator_residual(g, e, seq, parse_poly("x1^2", 1));
  CHECK(rep.sample_mean == doctest::Approx(0.0));
  CHECK(rep.mu_integral == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rep.rhs == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(rep.residual <= 1e-3);
  CHECK(rep.x_resolution == default_x_resolution(GroupId::A1));
}

TEST_CASE("A2 mixed monomial") {
  const auto a2 = build_tables(GroupId::A2);
  const CharacterEngine e(a2);
  const auto g = build_quadrature(e, default_resolution(GroupId::A2));
  const auto rep = integral_operator_residual(g, e, sample_haar(a2, 100, 3), parse_poly("x1*x2", 2));
  CHECK(rep.residual <= 5e-3);
  // Face terms add up to the left side.
  double sum = 0.0;
  for (std::size_t J = 1; J < rep.face_terms.size(); ++J) sum += rep.face_terms[J];
  CHECK(sum == doctest::Approx(rep.lhs));
}

TEST_CASE("polynomials vanishing on the upper faces only need the full term") {
  const auto a2 = build_tables(GroupId::A2);
  const CharacterEngine e(a2);
  const auto g = build_quadrature(e, {200, 200});
  const auto rep = integral_operator_residual(g, e, sample_haar(a2, 60, 5), parse_poly("x1*x2 - 3*x1 - 3*x2 + 9", 2),
                                              256);
  CHECK(std::fabs(rep.face_terms[1]) <= 1e-12);
  CHECK(std::fabs(rep.face_terms[2]) <= 1e-12);
  CHECK(rep.residual <= 5e-3);
}

TEST_CASE("input checks") {
  const CharacterEngine e(a1());
  const auto g = build_quadrature(e, {1000});
  const auto seq = sample_haar(a1(), 5, 1);
  CHECK_THROWS_AS(integral_operator_residual(g, e, seq, parse_poly("x1", 2)), Error);
  CHECK_THROWS_AS(integral_operator_residual(g, e, seq, parse_poly("x1", 1), 1), Error);
  CHECK_THROWS_AS(integral_operator_residual(g, std::span<const PushPoint>{}, parse_poly("x1", 1), 64), Error);
}
