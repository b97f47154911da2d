#include "lieeq/kernel_lab.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lieeq/torus_chars.hpp"

namespace lieeq {

double KernelParams::radius() const { return 2.0 * M * std::sqrt(static_cast<double>(r)); }

KernelParams make_kernel_params(int r, double M, int k) {
  if (r < 1 || r > 3) throw Error(ErrorKind::InvalidArgument, "kernel rank must be 1, 2 or 3");
  if (!(M > 0.0) || !std::isfinite(M)) throw Error(ErrorKind::InvalidArgument, "kernel half-width M must be positive");
  if (k < 1 || k % 2 == 0) throw Error(ErrorKind::InvalidArgument, "kernel degree k must be odd and positive");
  return KernelParams{r, M, k};
}

double vol_sphere(int r) {
  switch (r) {
    case 1: return 2.0;
    case 2: return kTwoPi;
    case 3: return 2.0 * kTwoPi;
    default: throw Error(ErrorKind::InvalidArgument, "vol_sphere supports r = 1, 2, 3");
  }
}

double chebyshev_T(const KernelParams& p, double y) {
  const double R = p.radius();
  if (!(std::fabs(y) <= R * (1.0 + 1e-12))) {
    throw Error(ErrorKind::DomainExceeded, "|y| exceeds 2 M sqrt(r)");
  }
  const double u = std::clamp(y / R, -1.0, 1.0);
  return std::cos(p.k * std::acos(u));
}

double kernel_fk_radial(const KernelParams& p, double rho) {
  const int E = p.exponent();
  if (rho < 1e-8) return std::pow(p.k / p.radius(), E);
  return std::pow(chebyshev_T(p, rho) / rho, E);
}

double kernel_fk(const KernelParams& p, std::span<const double> x) {
  if (static_cast<int>(x.size()) != p.r) throw Error(ErrorKind::InvalidArgument, "kernel_fk: wrong dimension");
  double s = 0.0;
  for (double xi : x) s += xi * xi;
  return kernel_fk_radial(p, std::sqrt(s));
}

std::vector<mpq_class> chebyshev_coefficients(int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "Chebyshev degree must be nonnegative");
  std::vector<mpq_class> prev{1};
  if (k == 0) return prev;
  std::vector<mpq_class> cur{0, 1};
  for (int n = 1; n < k; ++n) {
    std::vector<mpq_class> next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RationalPoly kernel_polynomial(const KernelParams& p, std::span<const double> v) {
  if (static_cast<int>(v.size()) != p.r) throw Error(ErrorKind::InvalidArgument, "kernel_polynomial: wrong dimension");
  const mpq_class M(p.M);
  const mpq_class scale_sq = 4 * M * M * p.r;  // (2 M sqrt r)^2
  RationalPoly s(p.r);
  for (int i = 0; i < p.r; ++i) {
    RationalPoly d = RationalPoly::variable(p.r, i) - RationalPoly::constant(p.r, mpq_class(v[static_cast<std::size_t>(i)]));
    s += d * d;
  }
  s *= mpq_class(1 / scale_sq);

  // T_k(u) = u Q(u^2) for odd k; Horner in s = u^2.
  const auto a = chebyshev_coefficients(p.k);
  RationalPoly q(p.r);
  for (std::size_t j = a.size(); j-- > 0;) {
    if (j % 2 == 0) continue;
    q = q * s + RationalPoly::constant(p.r, a[j]);
  }
  const int E = p.exponent();
  mpq_class denom = 1;
  for (int i = 0; i < E / 2; ++i) denom *= scale_sq;
  RationalPoly f = q.pow(static_cast<unsigned>(E));
  f *= mpq_class(1 / denom);
  return f;
}

namespace {

template <class F>
double simpson(F&& g, double a, double b, std::size_t intervals) {
  if (intervals % 2 == 1) ++intervals;
  if (!(b > a)) return 0.0;
  const double h = (b - a) / static_cast<double>(intervals);
  double odd = 0.0, even = 0.0;
  for (std::size_t i = 1; i < intervals; ++i) {
    const double x = a + h * static_cast<double>(i);
    (i % 2 ? odd : even) += g(x);
  }
  return h / 3.0 * (g(a) + g(b) + 4.0 * odd + 2.0 * even);
}

}  // namespace

MassCheck kernel_mass_inner(const KernelParams& p, double c, std::size_t intervals) {
  const double rs = std::sqrt(static_cast<double>(p.r));
  if (!(c > 0.0) || c > 1.2 * p.M * rs * (1.0 + 1e-12)) {
    throw Error(ErrorKind::DomainExceeded, "c must lie in (0, 6/5 M sqrt(r)]");
  }
  const int E = p.exponent();
  const double vol = vol_sphere(p.r);
  MassCheck out;
  out.upper = std::pow(c, p.r) * std::pow(p.k, E - p.r) * vol / (p.r * std::pow(p.M * rs, E));
  out.lower = std::pow(0.2, E) * out.upper;
  out.integral = vol * simpson([&](double rho) { return kernel_fk_radial(p, rho) * std::pow(rho, p.r - 1); }, 0.0,
                               c / p.k, intervals);
  constexpr double slack = 1e-6;
  out.holds = out.lower <= out.integral * (1.0 + slack) && out.integral <= out.upper * (1.0 + slack);
  return out;
}

TailCheck kernel_tail(const KernelParams& p, double t, std::size_t intervals) {
  const double R = p.radius();
  if (!(t > 0.0) || t > R * (1.0 + 1e-12)) throw Error(ErrorKind::DomainExceeded, "t must lie in (0, 2 M sqrt(r)]");
  const double vol = vol_sphere(p.r);
  TailCheck out;
  out.bound = 2.0 * vol * std::pow(t, p.r - p.exponent());
  out.integral =
      vol * simpson([&](double rho) { return kernel_fk_radial(p, rho) * std::pow(rho, p.r - 1); }, t, R, intervals);
  out.holds = out.integral <= out.bound * (1.0 + 1e-6);
  return out;
}

SupCheck sup_h_check(const KernelParams& p, std::span<const double> v, std::size_t points_per_axis) {
  if (static_cast<int>(v.size()) != p.r) throw Error(ErrorKind::InvalidArgument, "sup_h_check: wrong dimension");
  for (double vi : v) {
    if (std::fabs(vi) > p.M) throw Error(ErrorKind::DomainExceeded, "center v must lie in [-M, M]^r");
  }
  if (points_per_axis < 2) throw Error(ErrorKind::InvalidArgument, "sup_h_check needs at least 2 points per axis");
  const RationalPoly f = kernel_polynomial(p, v);
  const PolyEvaluator h(antiderivative_h(f, mpq_class(p.M)));

  const int E = p.exponent();
  SupCheck out;
  out.bound = 3.0 * vol_sphere(p.r) * std::pow(p.M * std::sqrt(static_cast<double>(p.r)), p.r - E) *
              std::pow(p.k, E - p.r);
  std::size_t total = 1;
  for (int i = 0; i < p.r; ++i) total *= points_per_axis;
  std::vector<double> x(static_cast<std::size_t>(p.r));
  for (std::size_t g = 0; g < total; ++g) {
    std::size_t rem = g;
    for (int i = p.r; i-- > 0;) {
      x[static_cast<std::size_t>(i)] =
          -p.M + 2.0 * p.M * static_cast<double>(rem % points_per_axis) / static_cast<double>(points_per_axis - 1);
      rem /= points_per_axis;
    }
    out.sup_abs_h = std::max(out.sup_abs_h, std::fabs(h(x)));
  }
  out.points = total;
  out.holds = out.sup_abs_h <= out.bound * (1.0 + 1e-6);
  return out;
}

}  // namespace lieeq
