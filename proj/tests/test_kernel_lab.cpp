#include <doctest.h>

#include <cmath>
#include <functional>

#include "generators.hpp"
#include "lieeq/error.hpp"
#include "lieeq/kernel_lab.hpp"
#include "lieeq/torus_chars.hpp"

using namespace lieeq;

namespace {

double chebyshev_recurrence(int k, double y) {
  double t0 = 1.0, t1 = y;
  if (k == 0) return t0;
  for (int n = 2; n <= k; ++n) {
    const double t2 = 2.0 * y * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

// Barycentric interpolation on Chebyshev points of the second kind.
struct ChebInterp {
  std::vector<double> nodes, values, weights;
  ChebInterp(int degree, double lo, double hi, const std::function<double(double)>& f) {
    for (int j = 0; j <= degree; ++j) {
      const double s = std::cos(kPi * j / degree);
      nodes.push_back(lo + (hi - lo) * (s + 1.0) / 2.0);
      values.push_back(f(nodes.back()));
      weights.push_back(((j % 2) ? -1.0 : 1.0) * ((j == 0 || j == degree) ? 0.5 : 1.0));
    }
  }
  double operator()(double s) const {
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (s == nodes[j]) return values[j];
      const double w = weights[j] / (s - nodes[j]);
      num += w * values[j];
      den += w;
    }
    return num / den;
  }
};

}  // namespace

TEST_CASE("kernel parameter validation") {
  CHECK_THROWS_AS(make_kernel_params(1, 2.0, 4), Error);
  CHECK_THROWS_AS(make_kernel_params(4, 2.0, 3), Error);
  CHECK_THROWS_AS(make_kernel_params(1, 0.0, 3), Error);
  const auto p = make_kernel_params(2, 3.0, 5);
  CHECK(p.exponent() == 4);
  CHECK(p.radius() == doctest::Approx(6.0 * std::sqrt(2.0)));
  CHECK(vol_sphere(1) == 2.0);
  CHECK(vol_sphere(2) == doctest::Approx(kTwoPi));
  CHECK(vol_sphere(3) == doctest::Approx(4.0 * kPi));
}

TEST_CASE("Chebyshev examples") {
  const auto p = make_kernel_params(1, 2.0, 3);
  CHECK(chebyshev_T(p, 0.0) == doctest::Approx(0.0));
  CHECK(chebyshev_T(p, p.radius()) == doctest::Approx(1.0));
  CHECK(chebyshev_T(p, 2.0) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(chebyshev_T(p, 4.1), Error);
  const auto c = chebyshev_coefficients(5);
  REQUIRE(c.size() == 6);
  CHECK(c[1] == 5);
  CHECK(c[3] == -20);
  CHECK(c[5] == 16);
}

TEST_CASE("property: Chebyshev closed form matches the recurrence") {
  testgen::Gen gen(701);
  for (int k : {1, 3, 5, 9, 15}) {
    const auto p = make_kernel_params(2, 3.0, k);
    for (int i = 0; i < 20; ++i) {
      const double y = gen.uniform(-p.radius(), p.radius());
      CHECK(std::fabs(chebyshev_T(p, y) - chebyshev_recurrence(k, y / p.radius())) <= 1e-10);
    }
  }
}

TEST_CASE("kernel values") {
  const auto p1 = make_kernel_params(1, 2.0, 3);
  const double origin1[] = {0.0};
  CHECK(kernel_fk(p1, origin1) == doctest::Approx(0.5625));
  const auto p2 = make_kernel_params(2, 3.0, 3);
  const double origin2[] = {0.0, 0.0};
  CHECK(kernel_fk(p2, origin2) == doctest::Approx(1.0 / 64.0));
  // Zero of T_3 at y = R cos(pi/6).
  const double zero = p1.radius() * std::cos(kPi / 6.0);
  CHECK(kernel_fk_radial(p1, zero) <= 1e-20);
}

TEST_CASE("property: f_k is a polynomial in |x|^2 of the stated degree") {
  for (int r : {1, 2, 3}) {
    for (int k : {3, 5, 9}) {
      const auto p = make_kernel_params(r, 2.0, k);
      const int degree = (1 + r / 2) * (k - 1);
      const double R2 = p.radius() * p.radius();
      const auto f = [&](double s) { return kernel_fk_radial(p, std::sqrt(s)); };
      const ChebInterp fit(degree, 0.0, R2, f);
      double scale = 0.0, worst = 0.0;
      for (int i = 0; i < 200; ++i) {
        const double s = R2 * (i + 0.37) / 200.0;
        scale = std::max(scale, std::fabs(f(s)));
        worst = std::max(worst, std::fabs(fit(s) - f(s)));
      }
      CHECK(worst <= 1e-8 * scale);
    }
  }
}

TEST_CASE("exact kernel expansion matches the trigonometric form") {
  testgen::Gen gen(711);
  for (int r : {1, 2}) {
    const auto p = make_kernel_params(r, 2.0, 5);
    std::vector<double> v(static_cast<std::size_t>(r));
    for (auto& c : v) c = gen.uniform(-1.0, 1.0);
    const auto poly = kernel_polynomial(p, v);
    CHECK(poly.degree() == 2 * (1 + r / 2) * (p.k - 1));
    const PolyEvaluator ev(poly);
    for (int i = 0; i < 30; ++i) {
      std::vector<double> x(static_cast<std::size_t>(r)), d(static_cast<std::size_t>(r));
      for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = gen.uniform(-2.0, 2.0);
        d[j] = x[j] - v[j];
      }
      CHECK(ev(x) == doctest::Approx(kernel_fk(p, d)).epsilon(1e-9));
    }
  }
}

TEST_CASE("property: inner mass sandwich over the test matrix") {
  for (int r : {1, 2}) {
    for (int k : {3, 5, 9}) {
      const double M = r == 1 ? 2.0 : 3.0;
      const auto p = make_kernel_params(r, M, k);
      for (double f : {0.5, 1.0, 1.2}) {
        const auto m = kernel_mass_inner(p, f * M * std::sqrt(static_cast<double>(r)));
        CHECK(m.holds);
        CHECK(m.lower <= m.integral);
        CHECK(m.integral <= m.upper * (1 + 1e-6));
      }
    }
  }
  CHECK_THROWS_AS(kernel_mass_inner(make_kernel_params(1, 2.0, 3), 2.5), Error);
  CHECK_THROWS_AS(kernel_mass_inner(make_kernel_params(1, 2.0, 3), 0.0), Error);
}

TEST_CASE("tail bounds") {
  const auto p1 = make_kernel_params(1, 2.0, 3);
  const double t = 2.0 / 3.0;
  const auto a = kernel_tail(p1, t);
  CHECK(a.bound == doctest::Approx(4.0 / t));
  CHECK(a.holds);
  const auto b = kernel_tail(p1, p1.radius());
  CHECK(b.integral == 0.0);
  CHECK(b.holds);
  CHECK(kernel_tail(make_kernel_params(2, 3.0, 5), 1.0).holds);
}

TEST_CASE("antiderivative examples") {
  const mpq_class two(2);
  const auto one1 = RationalPoly::constant(1, mpq_class(1));
  const auto h1 = antiderivative_h(one1, two);
  CHECK(h1 == RationalPoly::variable(1, 0) - RationalPoly::constant(1, two));

  const mpq_class M(7, 3);
  const auto one2 = RationalPoly::constant(2, mpq_class(1));
  const auto expected = (RationalPoly::variable(2, 0) - RationalPoly::constant(2, M)) *
                        (RationalPoly::variable(2, 1) - RationalPoly::constant(2, M));
  CHECK(antiderivative_h(one2, M) == expected);
  CHECK(antiderivative_h(RationalPoly(1), two).is_zero());
}

TEST_CASE("property: antiderivative reproduces f and vanishes on proper faces") {
  testgen::Gen gen(721);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = gen.integer(1, 3);
    RationalPoly f(m);
    const int terms = gen.integer(1, 5);
    for (int i = 0; i < terms; ++i) {
      std::vector<int> e(static_cast<std::size_t>(m), 0);
      const int deg = gen.integer(0, 6);
      for (int s = 0; s < deg; ++s) ++e[static_cast<std::size_t>(gen.integer(0, m - 1))];
      f.add_term(e, mpq_class(gen.integer(-9, 9)));
    }
    const mpq_class M(gen.integer(1, 20), gen.integer(1, 7));
    const auto h = antiderivative_h(f, M);
    CHECK(mixed_partial(h, (1u << m) - 1) == f);
    for (int i = 0; i < 100; ++i) {
      // Exact evaluation at a rational face point.
      std::vector<mpq_class> x(static_cast<std::size_t>(m));
      for (auto& v : x) v = M * mpq_class(gen.integer(-1000, 1000), 1000);
      const unsigned J = static_cast<unsigned>(gen.integer(0, (1 << m) - 2));
      for (int k = 0; k < m; ++k) {
        if (!(J & (1u << k))) x[static_cast<std::size_t>(k)] = M;
      }
      CHECK(h.evaluate(x) == 0);
      CHECK(face_restrict(h, J, M).is_zero());
    }
  }
}

TEST_CASE("sup of the constructed h") {
  const auto p = make_kernel_params(1, 2.0, 3);
  const double v0[] = {0.0};
  const auto a = sup_h_check(p, v0, 2001);
  CHECK(a.bound == doctest::Approx(9.0));
  CHECK(a.holds);
  CHECK(a.sup_abs_h > 0.0);
  const double v1[] = {1.5};
  CHECK(sup_h_check(make_kernel_params(1, 2.0, 9), v1, 2001).holds);
  const double v2[] = {0.0, 0.0};
  const auto c = sup_h_check(make_kernel_params(2, 3.0, 3), v2, 101);
  CHECK(c.holds);
  CHECK(c.points == 101 * 101);
}
