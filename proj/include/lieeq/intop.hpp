#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lieeq/discrepancy.hpp"
#include "lieeq/multipoly.hpp"

namespace lieeq {

struct IntopReport {
  double lhs = 0.0;  // sum over nonempty J of (-1)^{|J|} int R_J d_J h_J
  double rhs = 0.0;  // mean of h over the sample minus int h dmu
  double residual = 0.0;
  double sample_mean = 0.0;
  double mu_integral = 0.0;
  std::vector<double> face_terms;  // signed J term, indexed by bitmask J (entry 0 unused)
  std::size_t x_resolution = 0;
};

/// Cells per axis of the x-grid on [-M, M]^r used for the left side.
std::size_t default_x_resolution(GroupId g);

/// Both sides of the integration-by-parts identity
///   sum_{J != {}} (-1)^{|J|} int R_J(x) d_J h_J(x) dx_J = (1/N) sum h(a_i) - int h dmu,
/// where R_J and h_J are R and h with the coordinates outside J pinned to M.
/// The left side is a trapezoid rule on the x-grid with R taken from the
/// quadrature grid; the right side evaluates h directly.
IntopReport integral_operator_residual(const QuadratureGrid& grid, std::span<const PushPoint> pushed,
                                       const RealPoly& h, std::size_t x_resolution);
IntopReport integral_operator_residual(const QuadratureGrid& grid, const CharacterEngine& engine,
                                       const ClassSequence& seq, const RealPoly& h, std::size_t x_resolution = 0);

}  // namespace lieeq
