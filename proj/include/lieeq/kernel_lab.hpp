#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lieeq/multipoly.hpp"

namespace lieeq {

/// Chebyshev kernel f_k on the ball of radius 2 M sqrt(r) in R^r.
struct KernelParams {
  int r = 1;
  double M = 1.0;
  int k = 1;  // odd

  int exponent() const { return 2 * (1 + r / 2); }
  double radius() const;  // 2 M sqrt(r)
};

/// Validates r in 1..3, M > 0 and odd k >= 1.
KernelParams make_kernel_params(int r, double M, int k);

/// Surface measure of the unit sphere in R^r (r = 1, 2, 3).
double vol_sphere(int r);

/// cos(k arccos(y / (2 M sqrt r))); DomainExceeded outside the ball.
double chebyshev_T(const KernelParams& p, double y);
/// (T_k(|x|) / |x|)^exponent, with the limit value near the origin.
double kernel_fk(const KernelParams& p, std::span<const double> x);
double kernel_fk_radial(const KernelParams& p, double rho);

/// Integer coefficients of the degree-k Chebyshev polynomial, low order first.
std::vector<mpq_class> chebyshev_coefficients(int k);
/// f_k(x - v) expanded exactly; v and M are converted to rationals exactly.
RationalPoly kernel_polynomial(const KernelParams& p, std::span<const double> v);

struct MassCheck {
  double lower = 0.0;
  double upper = 0.0;
  double integral = 0.0;
  bool holds = false;  // lower <= integral <= upper up to 1e-6 relative
};

/// Radial Simpson quadrature of f_k over |x| <= c / k against the two-sided
/// bound; c must lie in (0, 1.2 M sqrt r].
MassCheck kernel_mass_inner(const KernelParams& p, double c, std::size_t intervals = 100000);

struct TailCheck {
  double bound = 0.0;
  double integral = 0.0;
  bool holds = false;
};

/// Integral of f_k over t <= |x| <= 2 M sqrt r against 2 vol t^{r - exponent}.
TailCheck kernel_tail(const KernelParams& p, double t, std::size_t intervals = 100000);

/// h_J: h with x_k = M for every k outside the bitmask J.
template <class C>
MultiPoly<C> face_restrict(const MultiPoly<C>& h, unsigned J, const C& M) {
  MultiPoly<C> out = h;
  for (int k = 0; k < h.nvars(); ++k) {
    if (!(J & (1u << k))) out = out.substitute(k, M);
  }
  return out;
}

/// Mixed derivative d/dx_J.
template <class C>
MultiPoly<C> mixed_partial(const MultiPoly<C>& h, unsigned J) {
  MultiPoly<C> out = h;
  for (int k = 0; k < h.nvars(); ++k) {
    if (J & (1u << k)) out = out.derivative(k);
  }
  return out;
}

/// h with d^m h / dx_1..dx_m = f and h_J = 0 for every proper J:
/// h = (-1)^m sum_J (-1)^{|J|} H_J where H is the iterated antiderivative of
/// f from the origin.
template <class C>
MultiPoly<C> antiderivative_h(const MultiPoly<C>& f, const C& M) {
  const int m = f.nvars();
  MultiPoly<C> full = f;
  for (int k = 0; k < m; ++k) full = full.integrate(k);
  MultiPoly<C> h(m);
  for (unsigned J = 0; J < (1u << m); ++J) {
    const int sign = ((m + __builtin_popcount(J)) % 2 == 0) ? 1 : -1;
    h += face_restrict(full, J, M) * C(sign);
  }
  return h;
}

struct SupCheck {
  double sup_abs_h = 0.0;
  double bound = 0.0;
  std::size_t points = 0;
  bool holds = false;
};

/// Builds h from f_k(x - v) on [-M, M]^r and compares max |h| on a uniform
/// grid with 3 vol (M sqrt r)^{r - exponent} k^{exponent - r}.
SupCheck sup_h_check(const KernelParams& p, std::span<const double> v, std::size_t points_per_axis);

}  // namespace lieeq
