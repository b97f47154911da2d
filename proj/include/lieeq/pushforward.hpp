#pragma once

#include <vector>

#include "lieeq/torus_chars.hpp"

namespace lieeq {

/// Image of a conjugacy class under the fundamental-character map:
/// real characters first (node order), then (Re, Im) per dual pair.
struct PushPoint {
  std::vector<double> x;

  friend bool operator==(const PushPoint&, const PushPoint&) = default;
};

PushPoint push_point(const CharacterEngine& engine, const TorusPoint& p);
PushPoint push_point(const RootSystemTables& t, const TorusPoint& p);

/// Density of the pushforward of Haar measure at P(p):
/// 2^{r2} / (2 pi)^r * |Weyl denominator|.
double density_F(const RootSystemTables& t, const TorusPoint& p);

/// Closed-form bound 2^{r2 + (dim G - 3r)/2} / pi^r on sup F.
double density_sup_bound(const RootSystemTables& t);

/// Smallest |2 sin(phase_alpha / 2)| over positive roots; zero on the walls.
double wall_distance(const RootSystemTables& t, const TorusPoint& p);

/// |det dP/dtheta| by central differences with step h. Throws SingularPoint
/// when the point is within 10 h of a wall or |Delta| < 1e-6.
double numeric_jacobian(const CharacterEngine& engine, const TorusPoint& p, double h = 1e-5);

/// 2^{-r2} |Weyl denominator|, the closed form the numeric Jacobian must match.
double jacobian_closed_form(const RootSystemTables& t, const TorusPoint& p);

/// Determinant by partial-pivot elimination (row-major n x n).
double determinant(std::vector<double> a, int n);

}  // namespace lieeq
