#include "lieeq/pushforward.hpp"

#include <cmath>

#include "lieeq/error.hpp"

namespace lieeq {

namespace {

// The weight-sum branch carries no division by the Weyl denominator, so its
// rounding error stays at the size of the dimension even next to a wall.
// Finite differences need that.
PushPoint push_impl(const CharacterEngine& engine, const TorusPoint& p, bool weight_sum) {
  const auto& t = engine.tables();
  auto eval = [&](int node) {
    const Weight w = fundamental_weight(t, node);
    return weight_sum ? engine.weight_sum_value(w, p) : engine.value(w, p).value;
  };
  PushPoint out;
  out.x.reserve(static_cast<std::size_t>(t.rank));
  for (int node : t.real_nodes) {
    const auto v = eval(node);
    if (std::abs(v.imag()) > 1e-6) {
      throw Error(ErrorKind::NumericalInconsistency,
                  "self-dual fundamental character has imaginary part " + std::to_string(v.imag()));
    }
    out.x.push_back(v.real());
  }
  for (int node : t.pair_nodes) {
    const auto v = eval(node);
    out.x.push_back(v.real());
    out.x.push_back(v.imag());
  }
  return out;
}

}  // namespace

PushPoint push_point(const CharacterEngine& engine, const TorusPoint& p) { return push_impl(engine, p, false); }

PushPoint push_point(const RootSystemTables& t, const TorusPoint& p) { return push_point(CharacterEngine(t), p); }

double density_F(const RootSystemTables& t, const TorusPoint& p) {
  return std::ldexp(1.0, t.r2) / std::pow(kTwoPi, t.rank) * std::abs(weyl_denominator(t, p));
}

double density_sup_bound(const RootSystemTables& t) {
  const double exponent = t.r2 + 0.5 * (t.dim_g - 3 * t.rank);
  return std::exp2(exponent) / std::pow(kPi, t.rank);
}

double wall_distance(const RootSystemTables& t, const TorusPoint& p) {
  double d = 2.0;
  for (const auto& alpha : t.positive_roots) {
    const double half = 0.5 * weight_phase(std::span<const int>(alpha.fw_coords), p);
    d = std::min(d, std::abs(2.0 * std::sin(half)));
  }
  return d;
}

double jacobian_closed_form(const RootSystemTables& t, const TorusPoint& p) {
  return std::ldexp(std::abs(weyl_denominator(t, p)), -t.r2);
}

double determinant(std::vector<double> a, int n) {
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    for (int i = c + 1; i < n; ++i) {
      if (std::abs(a[static_cast<std::size_t>(i * n + c)]) > std::abs(a[static_cast<std::size_t>(pivot * n + c)])) pivot = i;
    }
    const double pv = a[static_cast<std::size_t>(pivot * n + c)];
    if (pv == 0.0) return 0.0;
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(a[static_cast<std::size_t>(pivot * n + j)], a[static_cast<std::size_t>(c * n + j)]);
      det = -det;
    }
    det *= pv;
    for (int i = c + 1; i < n; ++i) {
      const double f = a[static_cast<std::size_t>(i * n + c)] / pv;
      for (int j = c; j < n; ++j) a[static_cast<std::size_t>(i * n + j)] -= f * a[static_cast<std::size_t>(c * n + j)];
    }
  }
  return det;
}

double numeric_jacobian(const CharacterEngine& engine, const TorusPoint& p, double h) {
  const auto& t = engine.tables();
  if (!(h > 0.0)) throw Error(ErrorKind::InvalidArgument, "finite-difference step must be positive");
  if (wall_distance(t, p) <= 10.0 * h || std::abs(weyl_denominator(t, p)) < 1e-6) {
    throw Error(ErrorKind::SingularPoint, "point too close to the singular set for a finite-difference Jacobian");
  }
  const int n = t.rank;
  std::vector<double> jac(static_cast<std::size_t>(n * n));
  for (int j = 0; j < n; ++j) {
    auto plus = p.theta();
    auto minus = p.theta();
    plus[static_cast<std::size_t>(j)] += h;
    minus[static_cast<std::size_t>(j)] -= h;
    const auto fp = push_impl(engine, TorusPoint(plus), true);
    const auto fm = push_impl(engine, TorusPoint(minus), true);
    for (int i = 0; i < n; ++i) {
      jac[static_cast<std::size_t>(i * n + j)] = (fp.x[static_cast<std::size_t>(i)] - fm.x[static_cast<std::size_t>(i)]) / (2.0 * h);
    }
  }
  return std::abs(determinant(std::move(jac), n));
}

}  // namespace lieeq
