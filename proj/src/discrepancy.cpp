#include "lieeq/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "lieeq/error.hpp"
#include "lieeq/parallel.hpp"
#include "lieeq/simd/kernels.hpp"

namespace lieeq {

TorusPoint QuadratureGrid::node(std::size_t i) const {
  const auto r = static_cast<std::size_t>(rank);
  return TorusPoint(std::vector<double>(theta.begin() + static_cast<std::ptrdiff_t>(i * r),
                                        theta.begin() + static_cast<std::ptrdiff_t>((i + 1) * r)));
}

PushPoint QuadratureGrid::pushed_point(std::size_t i) const {
  const auto r = static_cast<std::size_t>(rank);
  return PushPoint{std::vector<double>(pushed.begin() + static_cast<std::ptrdiff_t>(i * r),
                                       pushed.begin() + static_cast<std::ptrdiff_t>((i + 1) * r))};
}

std::vector<std::size_t> default_resolution(GroupId g) {
  switch (g) {
    case GroupId::A1: return {100000};
    case GroupId::A2:
    case GroupId::C2: return {400, 400};
    case GroupId::G2: return {300, 300};
    case GroupId::A3:
    case GroupId::B3:
    case GroupId::C3: return {64, 64, 64};
  }
  return {};
}

QuadratureGrid build_quadrature(const CharacterEngine& engine, const std::vector<std::size_t>& resolution) {
  const auto& t = engine.tables();
  const auto r = static_cast<std::size_t>(t.rank);
  if (resolution.size() != r) {
    throw Error(ErrorKind::InvalidArgument, "resolution needs " + std::to_string(r) + " axis counts for " +
                                                std::string(to_string(t.group)));
  }
  for (std::size_t n : resolution) {
    if (n < 16) throw Error(ErrorKind::ResolutionTooCoarse, "resolution " + std::to_string(n) + " < 16 per axis");
  }
  const std::size_t total = std::accumulate(resolution.begin(), resolution.end(), std::size_t{1}, std::multiplies<>());

  double cell = 1.0;
  for (std::size_t n : resolution) cell *= kTwoPi / static_cast<double>(n);
  const double scale = cell / (std::pow(kTwoPi, static_cast<double>(r)) * static_cast<double>(t.weyl_order()));

  std::vector<double> theta(total * r);
  std::vector<double> pushed(total * r);
  std::vector<double> weights(total);
  parallel_for(total, [&](std::size_t begin, std::size_t end) {
    std::vector<double> th(r);
    for (std::size_t g = begin; g < end; ++g) {
      std::size_t rem = g;
      for (std::size_t j = r; j-- > 0;) {
        th[j] = kTwoPi * static_cast<double>(rem % resolution[j]) / static_cast<double>(resolution[j]);
        rem /= resolution[j];
      }
      const TorusPoint p(th);
      const PushPoint x = push_point(engine, p);
      std::copy(th.begin(), th.end(), theta.begin() + static_cast<std::ptrdiff_t>(g * r));
      std::copy(x.x.begin(), x.x.end(), pushed.begin() + static_cast<std::ptrdiff_t>(g * r));
      weights[g] = std::norm(weyl_denominator(t, p)) * scale;
    }
  });

  QuadratureGrid grid;
  grid.group = t.group;
  grid.rank = t.rank;
  grid.resolution = resolution;
  grid.M = static_cast<double>(t.M);
  grid.order.resize(total);
  std::iota(grid.order.begin(), grid.order.end(), std::size_t{0});
  std::stable_sort(grid.order.begin(), grid.order.end(),
                   [&](std::size_t a, std::size_t b) { return pushed[a * r] < pushed[b * r]; });

  grid.theta.resize(total * r);
  grid.pushed.resize(total * r);
  grid.weights.resize(total);
  grid.cumulative.resize(total);
  double running = 0.0;
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t g = grid.order[i];
    for (std::size_t j = 0; j < r; ++j) {
      grid.theta[i * r + j] = theta[g * r + j];
      grid.pushed[i * r + j] = pushed[g * r + j];
    }
    grid.weights[i] = weights[g];
    running += weights[g];
    grid.cumulative[i] = running;
    grid.max_weight = std::max(grid.max_weight, weights[g]);
  }
  grid.mass = running;
  if (std::fabs(grid.mass - 1.0) > 1e-2) {
    throw Error(ErrorKind::ResolutionTooCoarse, "quadrature mass " + std::to_string(grid.mass) + " deviates from 1");
  }
  return grid;
}

QuadratureGrid build_quadrature(const RootSystemTables& t, const std::vector<std::size_t>& resolution) {
  const CharacterEngine engine(t);
  return build_quadrature(engine, resolution);
}

double mu_box(const QuadratureGrid& grid, std::span<const double> corner) {
  const auto r = static_cast<std::size_t>(grid.rank);
  if (corner.size() != r) throw Error(ErrorKind::InvalidArgument, "mu_box: corner has wrong dimension");
  // Stored nodes are sorted on coordinate 0, so the candidates form a prefix.
  std::size_t lo = 0;
  std::size_t hi = grid.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (grid.pushed[mid * r] <= corner[0]) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == 0) return 0.0;
  if (r == 1) return grid.cumulative[lo - 1];
  double sum = 0.0;
  for (std::size_t i = 0; i < lo; ++i) {
    bool inside = true;
    for (std::size_t j = 1; j < r && inside; ++j) inside = grid.pushed[i * r + j] <= corner[j];
    if (inside) sum += grid.weights[i];
  }
  return sum;
}

std::vector<PushPoint> push_sequence(const CharacterEngine& engine, const ClassSequence& seq) {
  if (seq.group != engine.tables().group) {
    throw Error(ErrorKind::InvalidArgument, "sequence group " + std::string(to_string(seq.group)) +
                                                " does not match " + std::string(to_string(engine.tables().group)));
  }
  std::vector<PushPoint> out(seq.size());
  parallel_for(seq.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = push_point(engine, seq.points[i]);
  }, 64);
  return out;
}

namespace {

// In-place inclusive prefix sums along every axis of a row-major array.
template <class T>
void prefix_sum_axes(std::vector<T>& a, const std::vector<std::size_t>& dims) {
  std::size_t stride = 1;
  for (std::size_t j = dims.size(); j-- > 0;) {
    const std::size_t len = dims[j];
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
      if ((idx / stride) % len != 0) a[idx] += a[idx - stride];
    }
    stride *= len;
  }
}

}  // namespace

DiscrepancyReport star_discrepancy(const QuadratureGrid& grid, std::span<const PushPoint> pushed,
                                   std::size_t corner_cap) {
  const auto r = static_cast<std::size_t>(grid.rank);
  const std::size_t n = pushed.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "star_discrepancy: empty sequence");
  if (n >= (std::size_t{1} << 31)) throw Error(ErrorKind::InvalidArgument, "star_discrepancy: sequence too long");
  for (const auto& p : pushed) {
    if (p.x.size() != r) throw Error(ErrorKind::InvalidArgument, "star_discrepancy: point has wrong dimension");
  }

  // Candidate coordinates per axis.
  std::vector<std::vector<double>> axis(r);
  double product = 1.0;
  for (std::size_t j = 0; j < r; ++j) {
    auto& u = axis[j];
    u.reserve(n + 1);
    for (const auto& p : pushed) u.push_back(p.x[j]);
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if (u.back() < grid.M) u.push_back(grid.M);
    product *= static_cast<double>(u.size());
  }
  if (product > static_cast<double>(corner_cap)) {
    throw Error(ErrorKind::CandidateSetTooLarge, "corner set exceeds the cap of " + std::to_string(corner_cap) +
                                                     "; subsample the sequence or raise the cap");
  }
  const auto candidates = static_cast<std::size_t>(product);

  // Slabs along axis 0; inner arrays cover axes 1..r-1.
  std::vector<std::size_t> inner_dims;
  for (std::size_t j = 1; j < r; ++j) inner_dims.push_back(axis[j].size());
  const std::size_t inner = std::accumulate(inner_dims.begin(), inner_dims.end(), std::size_t{1}, std::multiplies<>());

  auto bin = [&](std::size_t j, double x, bool clamp) {
    const auto& u = axis[j];
    auto pos = static_cast<std::size_t>(std::lower_bound(u.begin(), u.end(), x) - u.begin());
    if (clamp && pos == u.size()) pos = u.size() - 1;
    return pos;
  };
  auto inner_index = [&](auto coord_of) {
    std::size_t idx = 0;
    for (std::size_t j = 1; j < r; ++j) idx = idx * axis[j].size() + coord_of(j);
    return idx;
  };

  struct Item {
    std::size_t slab;
    std::size_t inner;
    double weight;
  };
  std::vector<Item> nodes(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double* x = &grid.pushed[i * r];
    nodes[i] = {bin(0, x[0], true), inner_index([&](std::size_t j) { return bin(j, x[j], true); }), grid.weights[i]};
  }
  std::vector<Item> samples(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = pushed[i].x;
    samples[i] = {bin(0, x[0], false), inner_index([&](std::size_t j) { return bin(j, x[j], false); }), 1.0};
  }
  auto by_slab = [](const Item& a, const Item& b) { return a.slab < b.slab; };
  std::stable_sort(nodes.begin(), nodes.end(), by_slab);
  std::stable_sort(samples.begin(), samples.end(), by_slab);

  // Source of the strict count at each inner corner: the closed count one
  // step down on every inner axis, or nothing on the lower faces.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> open_src(inner, kNone);
  for (std::size_t idx = 0; idx < inner; ++idx) {
    std::size_t rem = idx;
    std::size_t src = 0;
    std::size_t stride = 1;
    bool ok = true;
    for (std::size_t j = inner_dims.size(); j-- > 0;) {
      const std::size_t c = rem % inner_dims[j];
      rem /= inner_dims[j];
      if (c == 0) ok = false;
      src += (c == 0 ? 0 : c - 1) * stride;
      stride *= inner_dims[j];
    }
    if (ok) open_src[idx] = src;
  }

  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> cum_h(inner, 0.0), slab_h(inner);
  std::vector<std::uint32_t> cum_c(inner, 0), prev_c(inner, 0), slab_c(inner), open_c(inner);
  std::vector<double> closed_frac(inner), open_frac(inner);

  simd::ArgMax best{-1.0, 0};
  std::size_t best_slab = 0;
  bool best_open = false;
  std::size_t ni = 0, si = 0;
  for (std::size_t s = 0; s < axis[0].size(); ++s) {
    std::fill(slab_h.begin(), slab_h.end(), 0.0);
    std::fill(slab_c.begin(), slab_c.end(), 0u);
    for (; ni < nodes.size() && nodes[ni].slab == s; ++ni) slab_h[nodes[ni].inner] += nodes[ni].weight;
    for (; si < samples.size() && samples[si].slab == s; ++si) ++slab_c[samples[si].inner];
    prefix_sum_axes(slab_h, inner_dims);
    prefix_sum_axes(slab_c, inner_dims);

    prev_c = cum_c;
    for (std::size_t i = 0; i < inner; ++i) {
      cum_h[i] += slab_h[i];
      cum_c[i] += slab_c[i];
      open_c[i] = open_src[i] == kNone ? 0u : prev_c[open_src[i]];
    }
    simd::counts_to_fraction(cum_c, inv_n, closed_frac);
    simd::counts_to_fraction(open_c, inv_n, open_frac);
    const simd::ArgMax c = simd::max_abs_diff(cum_h, closed_frac);
    const simd::ArgMax o = simd::max_abs_diff(cum_h, open_frac);
    const bool take_open = o.value > c.value || (o.value == c.value && o.index < c.index);
    const simd::ArgMax slab_best = take_open ? o : c;
    if (slab_best.value > best.value) {
      best = slab_best;
      best_slab = s;
      best_open = take_open;
    }
  }

  DiscrepancyReport rep;
  rep.group = grid.group;
  rep.n = n;
  rep.resolution = grid.resolution;
  rep.d_star = best.value;
  rep.d_lower = best.value;
  rep.d_upper = std::ldexp(best.value, static_cast<int>(r));
  rep.argmax_open = best_open;
  rep.candidates = candidates;
  rep.mass = grid.mass;
  rep.quad_error_hint = std::fabs(grid.mass - 1.0) + grid.max_weight;
  rep.argmax_corner.x.resize(r);
  rep.argmax_corner.x[0] = axis[0][best_slab];
  std::size_t rem = best.index;
  for (std::size_t j = r; j-- > 1;) {
    rep.argmax_corner.x[j] = axis[j][rem % axis[j].size()];
    rem /= axis[j].size();
  }
  return rep;
}

DiscrepancyReport star_discrepancy(const QuadratureGrid& grid, const CharacterEngine& engine,
                                   const ClassSequence& seq, std::size_t corner_cap) {
  if (seq.group != grid.group) {
    throw Error(ErrorKind::InvalidArgument, "grid and sequence belong to different groups");
  }
  const auto pushed = push_sequence(engine, seq);
  return star_discrepancy(grid, pushed, corner_cap);
}

}  // namespace lieeq
