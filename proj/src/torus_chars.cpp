#include "lieeq/torus_chars.hpp"

#include <cmath>

#include "lieeq/error.hpp"
#include "lieeq/summation.hpp"

namespace lieeq {

double canonical_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

TorusPoint::TorusPoint(std::vector<double> theta) : theta_(std::move(theta)) {
  for (auto& t : theta_) {
    if (!std::isfinite(t)) throw Error(ErrorKind::InvalidArgument, "torus coordinate is not finite");
    t = canonical_angle(t);
  }
}

double weight_phase(std::span<const int> coords, const TorusPoint& p) {
  double acc = 0.0;
  for (std::size_t j = 0; j < coords.size(); ++j) acc += coords[j] * p[j];
  return acc;
}

double weight_phase(const Weight& lam, const TorusPoint& p) { return weight_phase(std::span<const int>(lam.coords), p); }

std::complex<double> weyl_denominator(const RootSystemTables& t, const TorusPoint& p) {
  std::complex<double> acc{1.0, 0.0};
  for (const auto& alpha : t.positive_roots) {
    const double half = 0.5 * weight_phase(std::span<const int>(alpha.fw_coords), p);
    acc *= std::complex<double>(0.0, 2.0 * std::sin(half));
  }
  return acc;
}

std::complex<double> alternating_sum(const RootSystemTables& t, const Weight& mu, const TorusPoint& p) {
  CompensatedComplexSum sum;
  for (const auto& w : t.weyl) {
    const auto image = w.matrix.apply(mu.coords);
    const double phase = weight_phase(std::span<const int>(image), p);
    sum.add(static_cast<double>(w.sign) * std::polar(1.0, phase));
  }
  return sum.value();
}

CharacterEngine::CharacterEngine(const RootSystemTables& tables, double eps, FreudenthalLimits limits)
    : tables_(&tables), eps_(eps), limits_(limits) {
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "singular threshold eps must be positive");
  rho_orbit_ = orbit_of(tables.rho);
}

CharacterEngine::Orbit CharacterEngine::orbit_of(const Weight& mu) const {
  Orbit o;
  const auto& t = *tables_;
  o.images.reserve(t.weyl.size() * static_cast<std::size_t>(t.rank));
  for (const auto& w : t.weyl) {
    const auto image = w.matrix.apply(mu.coords);
    o.images.insert(o.images.end(), image.begin(), image.end());
    o.signs.push_back(w.sign);
  }
  return o;
}

// Extended precision: near the walls the alternating sums cancel down to the
// size of the Weyl denominator, and double phases would cost ~1e-7 there.
std::complex<double> CharacterEngine::orbit_sum(const Orbit& orbit, const TorusPoint& p) const {
  const auto r = static_cast<std::size_t>(tables_->rank);
  long double re = 0.0L;
  long double im = 0.0L;
  for (std::size_t k = 0; k < orbit.signs.size(); ++k) {
    const int* m = orbit.images.data() + k * r;
    long double phase = 0.0L;
    for (std::size_t j = 0; j < r; ++j) phase += static_cast<long double>(m[j]) * static_cast<long double>(p[j]);
    const long double sign = orbit.signs[k];
    re += sign * std::cos(phase);
    im += sign * std::sin(phase);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

void CharacterEngine::check_label(const Weight& lam) const {
  if (lam.rank() != tables_->rank || !lam.is_dominant()) {
    throw Error(ErrorKind::NonDominantWeight, "character label must be dominant, got " + to_string(lam));
  }
}

std::shared_ptr<const WeightSystem> CharacterEngine::weight_system(const Weight& lam) const {
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(lam); it != cache_.end()) return it->second;
  }
  auto ws = std::make_shared<const WeightSystem>(freudenthal_multiplicities(*tables_, lam, limits_));
  std::lock_guard lock(cache_mutex_);
  return cache_.emplace(lam, std::move(ws)).first->second;
}

std::complex<double> CharacterEngine::weight_sum_value(const Weight& lam, const TorusPoint& p) const {
  check_label(lam);
  const auto ws = weight_system(lam);
  CompensatedComplexSum sum;
  for (const auto& [mu, mult] : *ws) {
    sum.add(static_cast<double>(mult) * std::polar(1.0, weight_phase(mu, p)));
  }
  return sum.value();
}

std::complex<double> CharacterEngine::ratio_value(const Weight& lam, const TorusPoint& p) const {
  check_label(lam);
  const auto den = orbit_sum(rho_orbit_, p);
  if (std::abs(den) < eps_) throw Error(ErrorKind::SingularPoint, "Weyl denominator below threshold");
  Weight shifted = lam;
  for (auto& c : shifted.coords) c += 1;
  return orbit_sum(orbit_of(shifted), p) / den;
}

CharValue CharacterEngine::value(const Weight& lam, const TorusPoint& p) const {
  return values(lam, std::span<const TorusPoint>(&p, 1)).front();
}

std::vector<CharValue> CharacterEngine::values(const Weight& lam, std::span<const TorusPoint> points) const {
  check_label(lam);
  Weight shifted = lam;
  for (auto& c : shifted.coords) c += 1;
  const Orbit numerator = orbit_of(shifted);
  std::vector<CharValue> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    if (p.rank() != tables_->rank) throw Error(ErrorKind::InvalidArgument, "torus point rank mismatch");
    const auto den = orbit_sum(rho_orbit_, p);
    if (std::abs(den) >= eps_) {
      out.push_back({orbit_sum(numerator, p) / den, EvalMethod::Ratio});
    } else {
      out.push_back({weight_sum_value(lam, p), EvalMethod::WeightSum});
    }
  }
  return out;
}

CharValue character_value(const RootSystemTables& t, const Weight& lam, const TorusPoint& p, double eps) {
  return CharacterEngine(t, eps).value(lam, p);
}

std::vector<Weight> dominant_weights_up_to(int rank, int d, bool include_trivial) {
  std::vector<Weight> out;
  if (d < 0 || rank <= 0) return out;
  std::vector<int> m(static_cast<std::size_t>(rank), 0);
  // Odometer in lexicographic order, pruned by the level bound.
  while (true) {
    int level = 0;
    for (int c : m) level += c;
    if (level <= d && (include_trivial || level > 0)) out.push_back(Weight{m});
    int pos = rank - 1;
    while (pos >= 0) {
      ++m[static_cast<std::size_t>(pos)];
      int s = 0;
      for (int i = 0; i <= pos; ++i) s += m[static_cast<std::size_t>(i)];
      if (s <= d) break;
      m[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

TorusPoint act_on_torus(const WeylElement& w, const TorusPoint& p) {
  const int n = w.matrix.size();
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += w.matrix(j, i) * p[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return TorusPoint(std::move(out));
}

}  // namespace lieeq
