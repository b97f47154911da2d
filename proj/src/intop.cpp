#include "lieeq/intop.hpp"

#include <algorithm>
#include <cmath>

#include "lieeq/error.hpp"
#include "lieeq/kernel_lab.hpp"
#include "lieeq/summation.hpp"

namespace lieeq {

std::size_t default_x_resolution(GroupId g) {
  switch (g) {
    case GroupId::A1: return 65536;
    case GroupId::A2:
    case GroupId::C2:
    case GroupId::G2: return 1024;
    default: return 96;
  }
}

namespace {

struct EdgeGrid {
  double M;
  std::size_t cells;
  double edge(std::size_t j) const {
    return j == cells ? M : -M + 2.0 * M * static_cast<double>(j) / static_cast<double>(cells);
  }
  // First edge index whose edge is >= x, clamped to the last edge.
  std::size_t bin(double x) const {
    const double h = 2.0 * M / static_cast<double>(cells);
    auto j = static_cast<std::ptrdiff_t>(std::ceil((x + M) / h));
    j = std::clamp<std::ptrdiff_t>(j, 0, static_cast<std::ptrdiff_t>(cells));
    auto u = static_cast<std::size_t>(j);
    while (u > 0 && edge(u - 1) >= x) --u;
    while (u < cells && edge(u) < x) ++u;
    return u;
  }
};

void prefix_sum_all_axes(std::vector<double>& a, std::size_t len, int r) {
  std::size_t stride = 1;
  for (int j = 0; j < r; ++j) {
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
      if ((idx / stride) % len != 0) a[idx] += a[idx - stride];
    }
    stride *= len;
  }
}

}  // namespace

IntopReport integral_operator_residual(const QuadratureGrid& grid, std::span<const PushPoint> pushed,
                                       const RealPoly& h, std::size_t x_resolution) {
  const int r = grid.rank;
  const auto ur = static_cast<std::size_t>(r);
  if (h.nvars() != r) throw Error(ErrorKind::InvalidArgument, "polynomial variable count must equal the rank");
  if (pushed.empty()) throw Error(ErrorKind::InvalidArgument, "integral_operator_residual: empty sequence");
  if (x_resolution < 2) throw Error(ErrorKind::InvalidArgument, "x resolution must be at least 2");

  const EdgeGrid eg{grid.M, x_resolution};
  const std::size_t len = x_resolution + 1;
  std::size_t total = 1;
  for (int j = 0; j < r; ++j) total *= len;

  // H and the empirical CDF at every edge point, both with <= semantics.
  std::vector<double> R(total, 0.0);
  auto flat = [&](const double* x) {
    std::size_t idx = 0;
    for (std::size_t j = ur; j-- > 0;) idx = idx * len + eg.bin(x[j]);
    return idx;
  };
  const double inv_n = 1.0 / static_cast<double>(pushed.size());
  for (const auto& p : pushed) {
    if (p.x.size() != ur) throw Error(ErrorKind::InvalidArgument, "point has wrong dimension");
    R[flat(p.x.data())] += inv_n;
  }
  for (std::size_t i = 0; i < grid.size(); ++i) R[flat(&grid.pushed[i * ur])] -= grid.weights[i];
  prefix_sum_all_axes(R, len, r);

  IntopReport rep;
  rep.x_resolution = x_resolution;
  rep.face_terms.assign(std::size_t{1} << ur, 0.0);
  const double step = 2.0 * grid.M / static_cast<double>(x_resolution);

  std::vector<double> x(ur);
  CompensatedSum lhs;
  for (unsigned J = 1; J < (1u << ur); ++J) {
    const PolyEvaluator g(mixed_partial(face_restrict(h, J, grid.M), J));
    std::vector<std::size_t> axes;
    for (std::size_t j = 0; j < ur; ++j) {
      if (J & (1u << j)) axes.push_back(j);
    }
    std::size_t count = 1;
    for (std::size_t a = 0; a < axes.size(); ++a) count *= len;
    CompensatedSum term;
    for (std::size_t c = 0; c < count; ++c) {
      std::size_t rem = c;
      std::size_t idx = 0;
      double w = 1.0;
      std::vector<std::size_t> e(ur, x_resolution);
      for (std::size_t axis : axes) {
        e[axis] = rem % len;
        rem /= len;
        w *= (e[axis] == 0 || e[axis] == x_resolution) ? 0.5 * step : step;
      }
      for (std::size_t j = ur; j-- > 0;) idx = idx * len + e[j];
      for (std::size_t j = 0; j < ur; ++j) x[j] = eg.edge(e[j]);
      term.add(w * R[idx] * g(x));
    }
    const double signed_term = (__builtin_popcount(J) % 2 == 0 ? 1.0 : -1.0) * term.value();
    rep.face_terms[J] = signed_term;
    lhs.add(signed_term);
  }
  rep.lhs = lhs.value();

  const PolyEvaluator hv(h);
  CompensatedSum mean;
  for (const auto& p : pushed) mean.add(hv(p.x));
  rep.sample_mean = mean.value() * inv_n;
  CompensatedSum integral;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    integral.add(grid.weights[i] * hv(std::span<const double>(&grid.pushed[i * ur], ur)));
  }
  rep.mu_integral = integral.value();
  rep.rhs = rep.sample_mean - rep.mu_integral;
  rep.residual = std::fabs(rep.lhs - rep.rhs);
  return rep;
}

IntopReport integral_operator_residual(const QuadratureGrid& grid, const CharacterEngine& engine,
                                       const ClassSequence& seq, const RealPoly& h, std::size_t x_resolution) {
  if (seq.group != grid.group) throw Error(ErrorKind::InvalidArgument, "grid and sequence belong to different groups");
  if (x_resolution == 0) x_resolution = default_x_resolution(grid.group);
  const auto pushed = push_sequence(engine, seq);
  return integral_operator_residual(grid, pushed, h, x_resolution);
}

}  // namespace lieeq
