#include "lieeq/root_system.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "lieeq/error.hpp"

namespace lieeq {

namespace {

struct GroupData {
  GroupId id;
  std::string_view label;
  int rank;
  std::vector<int> cartan;  // row-major, Bourbaki node order
  std::vector<int> symmetrizer;
};

const std::vector<GroupData>& group_catalog() {
  static const std::vector<GroupData> catalog = {
      {GroupId::A1, "A1", 1, {2}, {1}},
      {GroupId::A2, "A2", 2, {2, -1, -1, 2}, {1, 1}},
      {GroupId::C2, "C2", 2, {2, -1, -2, 2}, {2, 1}},
      {GroupId::G2, "G2", 2, {2, -1, -3, 2}, {3, 1}},
      {GroupId::A3, "A3", 3, {2, -1, 0, -1, 2, -1, 0, -1, 2}, {1, 1, 1}},
      {GroupId::B3, "B3", 3, {2, -1, 0, -1, 2, -1, 0, -2, 2}, {2, 2, 1}},
      {GroupId::C3, "C3", 3, {2, -1, 0, -1, 2, -2, 0, -1, 2}, {1, 1, 2}},
  };
  return catalog;
}

const GroupData& lookup(GroupId g) {
  for (const auto& d : group_catalog()) {
    if (d.id == g) return d;
  }
  throw Error(ErrorKind::UnsupportedGroup, "group is not built into this library");
}

std::int64_t det_recursive(const std::vector<std::int64_t>& a, int n) {
  if (n == 1) return a[0];
  if (n == 2) return a[0] * a[3] - a[1] * a[2];
  std::int64_t det = 0;
  for (int col = 0; col < n; ++col) {
    std::vector<std::int64_t> minor;
    minor.reserve(static_cast<std::size_t>((n - 1) * (n - 1)));
    for (int i = 1; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j != col) minor.push_back(a[static_cast<std::size_t>(i * n + j)]);
      }
    }
    const std::int64_t sign = (col % 2 == 0) ? 1 : -1;
    det += sign * a[static_cast<std::size_t>(col)] * det_recursive(minor, n - 1);
  }
  return det;
}

std::int64_t cofactor(const IntMatrix& m, int row, int col) {
  const int n = m.size();
  if (n == 1) return 1;
  std::vector<std::int64_t> minor;
  for (int i = 0; i < n; ++i) {
    if (i == row) continue;
    for (int j = 0; j < n; ++j) {
      if (j != col) minor.push_back(m(i, j));
    }
  }
  const std::int64_t sign = ((row + col) % 2 == 0) ? 1 : -1;
  return sign * det_recursive(minor, n - 1);
}

IntMatrix simple_reflection_matrix(const IntMatrix& cartan, int i) {
  const int n = cartan.size();
  IntMatrix s = IntMatrix::identity(n);
  for (int j = 0; j < n; ++j) s(j, i) -= cartan(j, i);
  return s;
}

bool is_positive(const std::vector<int>& simple) {
  bool any = false;
  for (int c : simple) {
    if (c < 0) return false;
    any = any || c != 0;
  }
  return any;
}

int height(const Root& r) {
  return std::accumulate(r.simple_coords.begin(), r.simple_coords.end(), 0);
}

}  // namespace

std::string_view to_string(GroupId g) { return lookup(g).label; }

std::optional<GroupId> parse_group(std::string_view label) {
  for (const auto& d : group_catalog()) {
    if (d.label == label) return d.id;
  }
  return std::nullopt;
}

std::vector<GroupId> all_groups() {
  std::vector<GroupId> out;
  for (const auto& d : group_catalog()) out.push_back(d.id);
  return out;
}

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

int Weight::level() const { return std::accumulate(coords.begin(), coords.end(), 0); }

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) os << ',';
    os << w.coords[i];
  }
  os << ')';
  return os.str();
}

IntMatrix::IntMatrix(int n, std::vector<int> row_major) : n_(n), a_(std::move(row_major)) {
  if (a_.size() != static_cast<std::size_t>(n * n)) {
    throw Error(ErrorKind::InvalidArgument, "IntMatrix: data size does not match n*n");
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<int> IntMatrix::apply(const std::vector<int>& v) const {
  std::vector<int> out(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    int acc = 0;
    for (int j = 0; j < n_; ++j) acc += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  IntMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k)
      for (int j = 0; j < n_; ++j) out(i, j) += (*this)(i, k) * rhs(k, j);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

std::int64_t IntMatrix::determinant() const {
  std::vector<std::int64_t> a(a_.begin(), a_.end());
  return det_recursive(a, n_);
}

std::int64_t RootSystemTables::pairing(const std::vector<int>& a, const std::vector<int>& b) const {
  std::int64_t acc = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      acc += static_cast<std::int64_t>(a[static_cast<std::size_t>(i)]) * weight_gram(i, j) *
             b[static_cast<std::size_t>(j)];
  return acc;
}

Weight fundamental_weight(const RootSystemTables& t, int i) {
  Weight w{std::vector<int>(static_cast<std::size_t>(t.rank), 0)};
  w.coords[static_cast<std::size_t>(i)] = 1;
  return w;
}

RootSystemTables build_tables(GroupId group) {
  const GroupData& data = lookup(group);
  RootSystemTables t;
  t.group = group;
  t.rank = data.rank;
  t.cartan = IntMatrix(data.rank, data.cartan);
  t.symmetrizer = data.symmetrizer;
  const int n = t.rank;

  // Weyl group by closure under simple reflections, exact dedup.
  std::vector<IntMatrix> gens;
  for (int i = 0; i < n; ++i) gens.push_back(simple_reflection_matrix(t.cartan, i));
  std::set<IntMatrix> seen;
  std::deque<std::size_t> queue;
  t.weyl.push_back({IntMatrix::identity(n), 1, 0});
  seen.insert(t.weyl.front().matrix);
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      IntMatrix next = s * t.weyl[idx].matrix;
      if (seen.insert(next).second) {
        const int len = t.weyl[idx].length + 1;
        t.weyl.push_back({std::move(next), (len % 2 == 0) ? 1 : -1, len});
        queue.push_back(t.weyl.size() - 1);
      }
    }
  }

  // Roots: orbit of the simple roots under simple reflections.
  std::set<std::vector<int>> root_simple;
  std::vector<Root> all_roots;
  std::deque<Root> pending;
  for (int i = 0; i < n; ++i) {
    Root r;
    r.simple_coords.assign(static_cast<std::size_t>(n), 0);
    r.simple_coords[static_cast<std::size_t>(i)] = 1;
    r.fw_coords.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) r.fw_coords[static_cast<std::size_t>(j)] = t.cartan(j, i);
    root_simple.insert(r.simple_coords);
    pending.push_back(r);
  }
  while (!pending.empty()) {
    Root r = pending.front();
    pending.pop_front();
    all_roots.push_back(r);
    for (int i = 0; i < n; ++i) {
      const int c = r.fw_coords[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      Root s = r;
      s.simple_coords[static_cast<std::size_t>(i)] -= c;
      for (int j = 0; j < n; ++j) s.fw_coords[static_cast<std::size_t>(j)] -= c * t.cartan(j, i);
      if (root_simple.insert(s.simple_coords).second) pending.push_back(s);
    }
  }
  for (const auto& r : all_roots) {
    if (is_positive(r.simple_coords)) t.positive_roots.push_back(r);
  }
  std::sort(t.positive_roots.begin(), t.positive_roots.end(), [](const Root& a, const Root& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a.simple_coords > b.simple_coords;
  });

  t.rho = Weight{std::vector<int>(static_cast<std::size_t>(n), 1)};

  // Scaled Gram matrix of the fundamental weights: G = D * C^{-1}.
  const std::int64_t det = t.cartan.determinant();
  t.gram_scale = det;
  t.weight_gram = IntMatrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.weight_gram(i, j) = static_cast<int>(t.symmetrizer[static_cast<std::size_t>(i)] *
                                             cofactor(t.cartan, j, i));

  std::vector<int> minus_rho(static_cast<std::size_t>(n), -1);
  bool found_w0 = false;
  for (const auto& w : t.weyl) {
    if (w.matrix.apply(t.rho.coords) == minus_rho) {
      t.w0 = w;
      found_w0 = true;
      break;
    }
  }
  if (!found_w0) throw Error(ErrorKind::NumericalInconsistency, "longest Weyl element not found");

  t.fundamental.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& f = t.fundamental[static_cast<std::size_t>(i)];
    f.dimension = weyl_dimension(t, fundamental_weight(t, i));
    const Weight dual = dual_weight(t, fundamental_weight(t, i));
    for (int j = 0; j < n; ++j) {
      if (dual == fundamental_weight(t, j)) f.dual_index = j;
    }
    f.is_self_dual = f.dual_index == i;
    t.M = std::max(t.M, f.dimension);
  }
  for (int i = 0; i < n; ++i) {
    const auto& f = t.fundamental[static_cast<std::size_t>(i)];
    if (f.is_self_dual) {
      ++t.r1;
      t.real_nodes.push_back(i);
    } else if (i < f.dual_index) {
      ++t.r2;
      t.pair_nodes.push_back(i);
    }
  }
  t.dim_g = n + 2 * static_cast<int>(t.positive_roots.size());
  return t;
}

Weight simple_reflection(const RootSystemTables& t, int i, const Weight& w) {
  if (i < 0 || i >= t.rank) throw Error(ErrorKind::InvalidArgument, "simple reflection index out of range");
  Weight out = w;
  const int c = w.coords[static_cast<std::size_t>(i)];
  for (int j = 0; j < t.rank; ++j) out.coords[static_cast<std::size_t>(j)] -= c * t.cartan(j, i);
  return out;
}

std::int64_t weyl_dimension(const RootSystemTables& t, const Weight& lam) {
  if (lam.rank() != t.rank || !lam.is_dominant()) {
    throw Error(ErrorKind::NonDominantWeight, "weyl_dimension needs a dominant weight, got " + to_string(lam));
  }
  mpq_class q = 1;
  for (const auto& alpha : t.positive_roots) {
    std::int64_t shifted = 0;
    std::int64_t base = 0;
    for (int i = 0; i < t.rank; ++i) {
      const std::int64_t sd = static_cast<std::int64_t>(alpha.simple_coords[static_cast<std::size_t>(i)]) *
                              t.symmetrizer[static_cast<std::size_t>(i)];
      shifted += (lam.coords[static_cast<std::size_t>(i)] + 1) * sd;
      base += sd;
    }
    q *= mpq_class(static_cast<long>(shifted), static_cast<unsigned long>(base));
    q.canonicalize();
  }
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
    throw Error(ErrorKind::NumericalInconsistency, "Weyl dimension is not a representable integer");
  }
  return static_cast<std::int64_t>(q.get_num().get_si());
}

WeightSystem freudenthal_multiplicities(const RootSystemTables& t, const Weight& lam,
                                        const FreudenthalLimits& limits) {
  if (lam.rank() != t.rank || !lam.is_dominant()) {
    throw Error(ErrorKind::NonDominantWeight, "Freudenthal needs a dominant weight, got " + to_string(lam));
  }
  if (lam.level() > limits.max_level_sum) {
    throw Error(ErrorKind::WeightSystemTooLarge,
                "highest weight " + to_string(lam) + " exceeds the configured level limit " +
                    std::to_string(limits.max_level_sum));
  }
  const int n = t.rank;
  auto shifted_norm = [&](const std::vector<int>& mu) {
    std::vector<int> s(mu);
    for (auto& c : s) c += 1;
    return t.pairing(s, s);
  };
  const std::int64_t top = shifted_norm(lam.coords);

  WeightSystem mults;
  mults.emplace(lam, 1);
  std::vector<Weight> frontier{lam};
  for (int level = 1; !frontier.empty(); ++level) {
    std::set<Weight> candidates;
    for (const auto& mu : frontier) {
      for (int i = 0; i < n; ++i) {
        Weight nu = mu;
        for (int j = 0; j < n; ++j) nu.coords[static_cast<std::size_t>(j)] -= t.cartan(j, i);
        candidates.insert(std::move(nu));
      }
    }
    std::vector<Weight> next;
    for (const auto& nu : candidates) {
      const std::int64_t gap = top - shifted_norm(nu.coords);
      if (gap <= 0) continue;
      std::int64_t sum = 0;
      for (const auto& alpha : t.positive_roots) {
        const int ht = height(alpha);
        std::vector<int> probe = nu.coords;
        for (int k = 1; level - k * ht >= 0; ++k) {
          for (int j = 0; j < n; ++j) probe[static_cast<std::size_t>(j)] += alpha.fw_coords[static_cast<std::size_t>(j)];
          const auto it = mults.find(Weight{probe});
          if (it == mults.end()) continue;
          sum += t.pairing(probe, alpha.fw_coords) * it->second;
        }
      }
      if ((2 * sum) % gap != 0) {
        throw Error(ErrorKind::NumericalInconsistency,
                    "Freudenthal recursion produced a non-integral multiplicity at " + to_string(nu));
      }
      const std::int64_t m = 2 * sum / gap;
      if (m > 0) {
        mults.emplace(nu, m);
        next.push_back(nu);
        if (mults.size() > limits.node_cap) {
          throw Error(ErrorKind::WeightSystemTooLarge,
                      "weight system of " + to_string(lam) + " exceeds node cap " + std::to_string(limits.node_cap));
        }
      }
    }
    frontier = std::move(next);
  }
  return mults;
}

Weight dual_weight(const RootSystemTables& t, const Weight& lam) {
  Weight out{t.w0.matrix.apply(lam.coords)};
  for (auto& c : out.coords) c = -c;
  return out;
}

}  // namespace lieeq
