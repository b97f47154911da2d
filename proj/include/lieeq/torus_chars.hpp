#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "lieeq/root_system.hpp"

namespace lieeq {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.141592653589793238462643383279;

/// Conjugacy-class representative on the maximal torus, in coordinates where
/// the i-th fundamental weight evaluates to theta_i. Always in [0, 2pi)^r.
class TorusPoint {
 public:
  TorusPoint() = default;
  explicit TorusPoint(std::vector<double> theta);

  const std::vector<double>& theta() const { return theta_; }
  double operator[](std::size_t i) const { return theta_[i]; }
  int rank() const { return static_cast<int>(theta_.size()); }

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

 private:
  std::vector<double> theta_;
};

double canonical_angle(double theta);

enum class EvalMethod { Ratio, WeightSum };

struct CharValue {
  std::complex<double> value;
  EvalMethod method = EvalMethod::Ratio;
};

/// Sum_j m_j theta_j: the phase of e^lambda at the point.
double weight_phase(const Weight& lam, const TorusPoint& p);
double weight_phase(std::span<const int> coords, const TorusPoint& p);

/// Product over positive roots of (e^{alpha/2} - e^{-alpha/2}) = 2i sin(phase/2).
std::complex<double> weyl_denominator(const RootSystemTables& t, const TorusPoint& p);

/// Alternating sum  sum_w (-1)^w e^{w(mu)}  accumulated in stored Weyl order.
std::complex<double> alternating_sum(const RootSystemTables& t, const Weight& mu, const TorusPoint& p);

/// Evaluates irreducible characters. The Weyl character ratio is used away
/// from the singular set; below |denominator| < eps the Freudenthal weight
/// sum takes over. Weight systems are cached per highest weight, so one
/// engine should be shared across many evaluations. Thread-safe.
class CharacterEngine {
 public:
  explicit CharacterEngine(const RootSystemTables& tables, double eps = 1e-8, FreudenthalLimits limits = {});

  const RootSystemTables& tables() const { return *tables_; }
  double eps() const { return eps_; }
  const FreudenthalLimits& limits() const { return limits_; }

  CharValue value(const Weight& lam, const TorusPoint& p) const;
  /// Same result as value() per point; shares the Weyl-orbit setup.
  std::vector<CharValue> values(const Weight& lam, std::span<const TorusPoint> points) const;

  /// Ratio branch only; throws SingularPoint if |denominator| < eps.
  std::complex<double> ratio_value(const Weight& lam, const TorusPoint& p) const;
  /// Weight-sum branch only.
  std::complex<double> weight_sum_value(const Weight& lam, const TorusPoint& p) const;

  std::shared_ptr<const WeightSystem> weight_system(const Weight& lam) const;

 private:
  struct Orbit {
    std::vector<int> images;  // |W| * rank, w(lam + rho) per element
    std::vector<int> signs;
  };
  Orbit orbit_of(const Weight& mu) const;
  std::complex<double> orbit_sum(const Orbit& orbit, const TorusPoint& p) const;
  void check_label(const Weight& lam) const;

  const RootSystemTables* tables_;
  double eps_;
  FreudenthalLimits limits_;
  Orbit rho_orbit_;
  mutable std::mutex cache_mutex_;
  mutable std::map<Weight, std::shared_ptr<const WeightSystem>> cache_;
};

/// Convenience wrapper constructing a one-off engine.
CharValue character_value(const RootSystemTables& t, const Weight& lam, const TorusPoint& p, double eps = 1e-8);

/// All m >= 0 with sum m_i <= d, sorted lexicographically.
std::vector<Weight> dominant_weights_up_to(int rank, int d, bool include_trivial);

/// Weyl action on torus coordinates: applies the transpose of the weight
/// matrix, so e^mu(w.theta) = e^{w mu}(theta) and characters are invariant.
TorusPoint act_on_torus(const WeylElement& w, const TorusPoint& p);

}  // namespace lieeq
