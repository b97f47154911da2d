#pragma once

#include <complex>
#include <cstdint>

#include "lieeq/discrepancy.hpp"

namespace lieeq {

double constant_CG(const RootSystemTables& t);
/// 2 (1 + floor(r/2)) (k - 1) + r.
int degree_bound(const RootSystemTables& t, int k);

/// Mean of chi_lam over the sequence.
std::complex<double> character_moment(const CharacterEngine& engine, const Weight& lam, const ClassSequence& seq);

struct BoundReport {
  GroupId group{};
  std::size_t n = 0;
  int k = 1;
  int degree = 0;
  std::size_t char_count = 0;
  double moment_sum = 0.0;
  double c_g = 0.0;
  double rhs = 0.0;
  bool has_discrepancy = false;
  double d_star = 0.0;
  double d_upper = 0.0;
  bool holds = false;
  DiscrepancyReport discrepancy;
};

/// Right-hand side only: C_G (1/k + sum over nontrivial chi of degree <= the
/// bound of |mean chi|). The engine's Freudenthal level limit is raised to
/// the degree bound for points on the walls.
BoundReport rhs_bound(const CharacterEngine& engine, const ClassSequence& seq, int k);

/// rhs_bound plus the measured star discrepancy; holds = d_upper <= rhs.
BoundReport verify(const CharacterEngine& engine, const ClassSequence& seq, int k, const QuadratureGrid& grid,
                   std::size_t corner_cap = kDefaultCornerCap);

}  // namespace lieeq
