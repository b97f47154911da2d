#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "lieeq/pushforward.hpp"
#include "lieeq/sampling.hpp"

namespace lieeq {

/// Discretization of mu = P_*(Haar) on a uniform periodic torus grid.
/// Nodes are stored sorted by their first pushed coordinate; order[i] gives
/// the row-major grid index of stored node i.
struct QuadratureGrid {
  GroupId group{};
  int rank = 0;
  std::vector<std::size_t> resolution;
  std::vector<std::size_t> order;
  std::vector<double> theta;   // size() * rank
  std::vector<double> pushed;  // size() * rank
  std::vector<double> weights;
  std::vector<double> cumulative;  // prefix sums of weights in stored order
  double mass = 0.0;
  double max_weight = 0.0;
  double M = 0.0;

  std::size_t size() const { return weights.size(); }
  TorusPoint node(std::size_t i) const;
  PushPoint pushed_point(std::size_t i) const;
};

std::vector<std::size_t> default_resolution(GroupId g);

/// Throws ResolutionTooCoarse below 16 nodes per axis or when the mass is
/// off by more than 1e-2.
QuadratureGrid build_quadrature(const CharacterEngine& engine, const std::vector<std::size_t>& resolution);
QuadratureGrid build_quadrature(const RootSystemTables& t, const std::vector<std::size_t>& resolution);

/// mu(I_x): grid mass with every pushed coordinate <= corner.
double mu_box(const QuadratureGrid& grid, std::span<const double> corner);

struct DiscrepancyReport {
  GroupId group{};
  std::size_t n = 0;
  std::vector<std::size_t> resolution;
  double d_star = 0.0;
  double d_lower = 0.0;
  double d_upper = 0.0;
  PushPoint argmax_corner;
  bool argmax_open = false;  // maximum attained by the strict (<) count
  std::size_t candidates = 0;
  double mass = 0.0;
  double quad_error_hint = 0.0;
};

inline constexpr std::size_t kDefaultCornerCap = 40'000'000;

/// Sup over anchored boxes of |empirical - mu|, scanned over the product of
/// per-axis sample coordinates plus M, with both <= and < counts at every
/// corner. Ties go to the lexicographically smallest corner, closed first.
DiscrepancyReport star_discrepancy(const QuadratureGrid& grid, std::span<const PushPoint> pushed,
                                   std::size_t corner_cap = kDefaultCornerCap);
DiscrepancyReport star_discrepancy(const QuadratureGrid& grid, const CharacterEngine& engine,
                                   const ClassSequence& seq, std::size_t corner_cap = kDefaultCornerCap);

std::vector<PushPoint> push_sequence(const CharacterEngine& engine, const ClassSequence& seq);

}  // namespace lieeq
