#include "lieeq/et_bound.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lieeq/error.hpp"
#include "lieeq/parallel.hpp"
#include "lieeq/summation.hpp"

namespace lieeq {

double constant_CG(const RootSystemTables& t) {
  const double r = t.rank;
  const double exponent = t.r2 + 0.5 * (r + t.dim_g);
  return 600.0 * r * r * std::pow(10.0 * static_cast<double>(t.M), r) * std::exp2(exponent) / std::pow(kPi, r);
}

int degree_bound(const RootSystemTables& t, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be a positive integer");
  return 2 * (1 + t.rank / 2) * (k - 1) + t.rank;
}

std::complex<double> character_moment(const CharacterEngine& engine, const Weight& lam, const ClassSequence& seq) {
  if (seq.size() == 0) throw Error(ErrorKind::InvalidArgument, "character_moment: empty sequence");
  if (seq.group != engine.tables().group) throw Error(ErrorKind::InvalidArgument, "sequence group mismatch");
  const auto vals = engine.values(lam, seq.points);
  CompensatedComplexSum sum;
  for (const auto& v : vals) sum.add(v.value);
  return sum.value() / static_cast<double>(seq.size());
}

BoundReport rhs_bound(const CharacterEngine& engine, const ClassSequence& seq, int k) {
  const auto& t = engine.tables();
  BoundReport rep;
  rep.group = t.group;
  rep.n = seq.size();
  rep.k = k;
  rep.degree = degree_bound(t, k);

  // Wall points need weight systems up to the full degree.
  FreudenthalLimits limits = engine.limits();
  limits.max_level_sum = std::max(limits.max_level_sum, rep.degree);
  const CharacterEngine local(t, engine.eps(), limits);

  const auto weights = dominant_weights_up_to(t.rank, rep.degree, false);
  std::vector<double> moduli(weights.size());
  parallel_for(weights.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) moduli[i] = std::abs(character_moment(local, weights[i], seq));
  }, 8);
  CompensatedSum s;
  for (double m : moduli) s.add(m);

  rep.char_count = weights.size();
  rep.moment_sum = s.value();
  rep.c_g = constant_CG(t);
  rep.rhs = rep.c_g * (1.0 / k + rep.moment_sum);
  return rep;
}

BoundReport verify(const CharacterEngine& engine, const ClassSequence& seq, int k, const QuadratureGrid& grid,
                   std::size_t corner_cap) {
  BoundReport rep = rhs_bound(engine, seq, k);
  rep.discrepancy = star_discrepancy(grid, engine, seq, corner_cap);
  rep.has_discrepancy = true;
  rep.d_star = rep.discrepancy.d_star;
  rep.d_upper = rep.discrepancy.d_upper;
  rep.holds = rep.d_upper <= rep.rhs;
  return rep;
}

}  // namespace lieeq
