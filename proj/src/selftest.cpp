#include "lieeq/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "lieeq/discrepancy.hpp"
#include "lieeq/error.hpp"
#include "lieeq/et_bound.hpp"
#include "lieeq/intop.hpp"
#include "lieeq/kernel_lab.hpp"
#include "lieeq/pushforward.hpp"
#include "lieeq/sampling.hpp"
#include "lieeq/sequence_io.hpp"

namespace lieeq {

namespace {

const RootSystemTables& tables_for(GroupId g) {
  static std::mutex mu;
  static std::map<GroupId, RootSystemTables> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(g);
  if (it == cache.end()) it = cache.emplace(g, build_tables(g)).first;
  return it->second;
}

bool wanted(std::optional<GroupId> only, GroupId g) { return !only || *only == g; }

std::vector<GroupId> filter(std::optional<GroupId> only, std::vector<GroupId> groups) {
  std::vector<GroupId> out;
  for (GroupId g : groups) {
    if (wanted(only, g)) out.push_back(g);
  }
  return out;
}

// Collects failed checks and a few headline numbers for the result line.
class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (!cond) {
      ++failures_;
      if (failures_ <= 5) failed_ += (failures_ > 1 ? "; " : "") + what;
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  bool ok() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::string out = std::to_string(checks_) + " checks";
    if (!notes_.empty()) out += "; " + notes_;
    if (failures_ > 0) out += "; " + std::to_string(failures_) + " failed: " + failed_;
    return out;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string failed_;
  std::string notes_;
};

std::string num(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

TorusPoint random_regular_point(const RootSystemTables& t, SplitMix64& rng, double min_wall) {
  while (true) {
    std::vector<double> th(static_cast<std::size_t>(t.rank));
    for (auto& v : th) v = kTwoPi * rng.uniform();
    TorusPoint p(th);
    if (wall_distance(t, p) >= min_wall) return p;
  }
}

void criterion_jacobian(std::optional<GroupId> only, Checker& c) {
  for (GroupId g : filter(only, {GroupId::A1, GroupId::A2, GroupId::C2, GroupId::G2})) {
    const auto& t = tables_for(g);
    const CharacterEngine engine(t);
    SplitMix64 rng(1000 + static_cast<std::uint64_t>(g));
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const TorusPoint p = random_regular_point(t, rng, 0.05);
      const double exact = jacobian_closed_form(t, p);
      const double rel = std::fabs(numeric_jacobian(engine, p) - exact) / exact;
      worst = std::max(worst, rel);
      c.expect(rel <= 1e-4, std::string(to_string(g)) + " relative error " + num(rel));
    }
    c.note(std::string(to_string(g)) + " max rel err " + num(worst));
  }
}

void criterion_density(std::optional<GroupId> only, Checker& c) {
  for (GroupId g : filter(only, {GroupId::A1, GroupId::A2, GroupId::C2, GroupId::G2})) {
    const auto& t = tables_for(g);
    const CharacterEngine engine(t);
    const auto grid = build_quadrature(engine, default_resolution(g));
    const std::string label(to_string(g));
    c.expect(std::fabs(grid.mass - 1.0) <= 1e-3, label + " mass " + num(grid.mass));
    double sup = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) sup = std::max(sup, density_F(t, grid.node(i)));
    const double bound = density_sup_bound(t);
    c.expect(sup <= bound + 1e-9, label + " sup F " + num(sup) + " > bound " + num(bound));
    if (g == GroupId::A1) c.expect(sup >= 0.999 / kPi, "A1 sup F " + num(sup) + " < 0.999/pi");
    c.note(label + " mass-1 " + num(grid.mass - 1.0) + " supF/bound " + num(sup / bound));
  }
}

void criterion_characters(std::optional<GroupId> only, Checker& c) {
  for (GroupId g : filter(only, all_groups())) {
    const auto& t = tables_for(g);
    const std::string label(to_string(g));
    for (const auto& lam : dominant_weights_up_to(t.rank, 4, true)) {
      const auto ws = freudenthal_multiplicities(t, lam);
      std::int64_t total = 0;
      for (const auto& [mu, m] : ws) total += m;
      c.expect(total == weyl_dimension(t, lam), label + " dim mismatch at " + to_string(lam));
    }
    const CharacterEngine engine(t);
    SplitMix64 rng(2000 + static_cast<std::uint64_t>(g));
    const auto labels = dominant_weights_up_to(t.rank, 3, false);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const TorusPoint p = random_regular_point(t, rng, 0.05);
      for (const auto& lam : labels) {
        const double diff = std::abs(engine.ratio_value(lam, p) - engine.weight_sum_value(lam, p));
        worst = std::max(worst, diff);
        c.expect(diff <= 1e-7, label + " branch mismatch " + num(diff) + " at " + to_string(lam));
      }
    }
    c.note(label + " branch diff " + num(worst));
  }
  for (GroupId g : filter(only, {GroupId::A1, GroupId::A2})) {
    const auto& t = tables_for(g);
    const CharacterEngine engine(t);
    const auto grid = build_quadrature(engine, default_resolution(g));
    std::vector<TorusPoint> nodes;
    nodes.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) nodes.push_back(grid.node(i));
    const auto labels = dominant_weights_up_to(t.rank, 3, true);
    std::vector<std::vector<std::complex<double>>> vals;
    for (const auto& lam : labels) {
      std::vector<std::complex<double>> v;
      for (const auto& cv : engine.values(lam, nodes)) v.push_back(cv.value);
      vals.push_back(std::move(v));
    }
    double worst = 0.0;
    for (std::size_t a = 0; a < labels.size(); ++a) {
      for (std::size_t b = 0; b < labels.size(); ++b) {
        std::complex<double> ip = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) ip += grid.weights[i] * vals[a][i] * std::conj(vals[b][i]);
        const double err = std::abs(ip - (a == b ? 1.0 : 0.0));
        worst = std::max(worst, err);
        c.expect(err <= 1e-2, std::string(to_string(g)) + " <chi" + to_string(labels[a]) + ", chi" +
                                  to_string(labels[b]) + "> off by " + num(err));
      }
    }
    c.note(std::string(to_string(g)) + " orthonormality err " + num(worst));
  }
}

// Direct sweep over the sorted sample: the textbook 1D star discrepancy.
double sweep_oracle(const QuadratureGrid& grid, std::vector<double> a) {
  std::sort(a.begin(), a.end());
  const double n = static_cast<double>(a.size());
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double H = mu_box(grid, std::span<const double>(&a[i], 1));
    best = std::max({best, std::fabs(H - static_cast<double>(i + 1) / n), std::fabs(H - static_cast<double>(i) / n)});
  }
  return best;
}

void criterion_discrepancy(std::optional<GroupId> only, Checker& c) {
  if (!wanted(only, GroupId::A1)) return;
  const auto& t = tables_for(GroupId::A1);
  const CharacterEngine engine(t);
  const auto grid = build_quadrature(engine, default_resolution(GroupId::A1));
  double worst = 0.0;
  for (std::size_t n : {1u, 2u, 7u, 100u, 513u, 1000u}) {
    const auto seq = sample_haar(t, n, 4000 + n);
    const auto pushed = push_sequence(engine, seq);
    std::vector<double> a;
    for (const auto& p : pushed) a.push_back(p.x[0]);
    const double scan = star_discrepancy(grid, pushed).d_star;
    const double oracle = sweep_oracle(grid, a);
    worst = std::max(worst, std::fabs(scan - oracle));
    c.expect(std::fabs(scan - oracle) <= 1e-12, "N=" + std::to_string(n) + " scan " + num(scan) + " vs sweep " + num(oracle));
  }
  c.note("max |scan-sweep| " + num(worst));
  const auto single = star_discrepancy(grid, engine, constant_sequence(t, 1, TorusPoint({kPi / 2})));
  c.expect(std::fabs(single.d_star - 0.5) <= 2e-3, "D*({0}) = " + num(single.d_star));
  ClassSequence ends{GroupId::A1, {TorusPoint({0.0}), TorusPoint({kPi})}, Provenance::File, std::nullopt, "", 0};
  const auto pair = star_discrepancy(grid, engine, ends);
  c.expect(std::fabs(pair.d_star - 0.5) <= 2e-3, "D*({2,-2}) = " + num(pair.d_star));
  c.note("D*({0}) " + num(single.d_star) + ", D*({2,-2}) " + num(pair.d_star));
}

void criterion_theorem(std::optional<GroupId> only, Checker& c) {
  for (GroupId g : filter(only, {GroupId::A1, GroupId::A2})) {
    const auto& t = tables_for(g);
    const CharacterEngine engine(t);
    const auto grid = build_quadrature(engine, default_resolution(g));
    const bool rank1 = t.rank == 1;
    const std::vector<double> v = rank1 ? std::vector<double>{kTwoPi * (std::sqrt(5.0) - 1.0) / 2.0}
                                        : std::vector<double>{kTwoPi * (std::sqrt(2.0) - 1.0), kTwoPi * (std::sqrt(3.0) - 1.0)};
    const TorusPoint fixed = rank1 ? TorusPoint({kPi / 2}) : TorusPoint({0.7, 1.9});
    const std::vector<std::pair<std::string, ClassSequence>> seqs = {
        {"haar", sample_haar(t, 500, 5000 + static_cast<std::uint64_t>(g))},
        {"kronecker", kronecker_sequence(t, 500, v)},
        {"constant", constant_sequence(t, 50, fixed)},
    };
    double min_ratio = 1.0;
    for (const auto& [name, seq] : seqs) {
      const auto disc = star_discrepancy(grid, engine, seq);
      for (int k : {1, 3, 5, 9}) {
        BoundReport rep = rhs_bound(engine, seq, k);
        rep.d_star = disc.d_star;
        rep.d_upper = disc.d_upper;
        rep.holds = rep.d_upper <= rep.rhs;
        const double margin = rep.rhs - rep.d_upper;
        min_ratio = std::min(min_ratio, margin / rep.rhs);
        c.expect(rep.holds && margin >= 0.5 * rep.rhs, std::string(to_string(g)) + " " + name + " k=" +
                                                           std::to_string(k) + " margin " + num(margin / rep.rhs));
      }
    }
    c.note(std::string(to_string(g)) + " min margin/rhs " + num(min_ratio));
  }
}

void criterion_kernel(Checker& c) {
  for (int r : {1, 2}) {
    const double M = r == 1 ? 2.0 : 3.0;
    for (int k : {3, 5, 9}) {
      for (double factor : {0.5, 1.0, 1.2}) {
        const auto p = make_kernel_params(r, M, k);
        const double cc = factor * M * std::sqrt(static_cast<double>(r));
        const auto mass = kernel_mass_inner(p, cc);
        const auto tail = kernel_tail(p, cc / k);
        const std::string tag = "r=" + std::to_string(r) + " k=" + std::to_string(k) + " c=" + num(factor) + "Msqrt(r)";
        c.expect(mass.holds, tag + " sandwich " + num(mass.lower) + " <= " + num(mass.integral) + " <= " + num(mass.upper));
        c.expect(tail.holds, tag + " tail " + num(tail.integral) + " <= " + num(tail.bound));
      }
    }
  }
}

RationalPoly random_rational_poly(SplitMix64& rng, int m) {
  RationalPoly f(m);
  const int terms = 1 + static_cast<int>(rng.next() % 6);
  for (int i = 0; i < terms; ++i) {
    std::vector<int> e(static_cast<std::size_t>(m), 0);
    int budget = static_cast<int>(rng.next() % 7);
    for (int j = 0; j < m && budget > 0; ++j) {
      const int a = static_cast<int>(rng.next() % static_cast<std::uint64_t>(budget + 1));
      e[static_cast<std::size_t>(j)] = a;
      budget -= a;
    }
    const long num_ = static_cast<long>(rng.next() % 19) - 9;
    const unsigned long den = 1 + rng.next() % 5;
    f.add_term(e, mpq_class(num_, den));
  }
  return f;
}

void criterion_antiderivative(Checker& c) {
  SplitMix64 rng(7000);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 1 + trial % 3;
    RationalPoly f = random_rational_poly(rng, m);
    if (f.is_zero()) f = RationalPoly::constant(m, mpq_class(1));
    const mpq_class M(static_cast<long>(1 + rng.next() % 7), 1 + rng.next() % 3);
    const RationalPoly h = antiderivative_h(f, M);
    const unsigned full = (1u << m) - 1;
    c.expect(mixed_partial(h, full) == f, "trial " + std::to_string(trial) + " mixed partial differs from f");
    c.expect(h.degree() == f.degree() + m, "trial " + std::to_string(trial) + " degree " + std::to_string(h.degree()));
    for (unsigned J = 0; J < full; ++J) {
      c.expect(face_restrict(h, J, M).is_zero(),
               "trial " + std::to_string(trial) + " face J=" + std::to_string(J) + " not identically zero");
    }
  }
}

void criterion_intop(std::optional<GroupId> only, Checker& c) {
  if (wanted(only, GroupId::A1)) {
    const auto& t = tables_for(GroupId::A1);
    const CharacterEngine engine(t);
    const auto grid = build_quadrature(engine, default_resolution(GroupId::A1));
    const std::vector<std::pair<std::string, ClassSequence>> seqs = {
        {"single", constant_sequence(t, 1, TorusPoint({kPi / 2}))},
        {"haar100", sample_haar(t, 100, 8000)},
    };
    double worst = 0.0;
    for (const auto& [name, seq] : seqs) {
      for (const char* text : {"x1", "x1^2", "x1^3"}) {
        const auto rep = integral_operator_residual(grid, engine, seq, parse_poly(text, 1));
        worst = std::max(worst, rep.residual);
        c.expect(rep.residual <= 1e-3, "A1 " + name + " h=" + text + " residual " + num(rep.residual));
      }
    }
    c.note("A1 max residual " + num(worst));

    // Fixed instance under doubled torus and x resolution.
    const auto seq = constant_sequence(t, 1, TorusPoint({kPi / 2}));
    const auto h = parse_poly("x1^2", 1);
    const auto coarse = integral_operator_residual(build_quadrature(engine, {2000}), engine, seq, h, 256);
    const auto fine = integral_operator_residual(build_quadrature(engine, {4000}), engine, seq, h, 512);
    const double ratio = coarse.residual / fine.residual;
    c.expect(ratio >= 2.0, "halving ratio " + num(ratio) + " (" + num(coarse.residual) + " -> " + num(fine.residual) + ")");
    c.note("halving ratio " + num(ratio));
  }
  if (wanted(only, GroupId::A2)) {
    const auto& t = tables_for(GroupId::A2);
    const CharacterEngine engine(t);
    const auto grid = build_quadrature(engine, default_resolution(GroupId::A2));
    const auto rep = integral_operator_residual(grid, engine, sample_haar(t, 100, 8100), parse_poly("x1*x2", 2));
    c.expect(rep.residual <= 5e-3, "A2 h=x1*x2 residual " + num(rep.residual));
    c.note("A2 residual " + num(rep.residual));
  }
}

double semicircle_cdf_analytic(double x) {
  x = std::clamp(x, -2.0, 2.0);
  return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * kPi) + std::asin(x / 2.0) / kPi;
}

// CDF of the pushed Haar measure on A1, tabulated by Simpson integration of
// the density F(2 cos theta) = |2 sin theta| / (2 pi) over x.
class NumericSemicircleCdf {
 public:
  explicit NumericSemicircleCdf(const RootSystemTables& t, std::size_t cells = 20000) : cells_(cells), table_(cells + 1) {
    auto F = [&](double x) { return density_F(t, TorusPoint({std::acos(std::clamp(x / 2.0, -1.0, 1.0))})); };
    const double h = 4.0 / static_cast<double>(cells);
    constexpr int kSub = 8;
    table_[0] = 0.0;
    for (std::size_t i = 0; i < cells; ++i) {
      const double a = -2.0 + h * static_cast<double>(i);
      const double s = h / kSub;
      double acc = F(a) + F(a + h);
      for (int j = 1; j < kSub; ++j) acc += (j % 2 ? 4.0 : 2.0) * F(a + s * j);
      table_[i + 1] = table_[i] + acc * s / 3.0;
    }
  }
  double operator()(double x) const {
    if (x <= -2.0) return 0.0;
    if (x >= 2.0) return table_.back();
    const double pos = (x + 2.0) / 4.0 * static_cast<double>(cells_);
    const auto i = std::min(static_cast<std::size_t>(pos), cells_ - 1);
    const double frac = pos - static_cast<double>(i);
    return table_[i] + frac * (table_[i + 1] - table_[i]);
  }

 private:
  std::size_t cells_;
  std::vector<double> table_;
};

void criterion_sampler(std::optional<GroupId> only, Checker& c) {
  if (wanted(only, GroupId::A1)) {
    const auto& t = tables_for(GroupId::A1);
    const CharacterEngine engine(t);
    const auto seq = sample_haar(t, 100000, 9000);
    const double mean = character_moment(engine, Weight{{1}}, seq).real();
    c.expect(std::fabs(mean) <= 0.02, "A1 mean chi_1 " + num(mean));
    c.expect(std::fabs(seq.acceptance_rate() - 0.5) <= 0.01, "A1 acceptance " + num(seq.acceptance_rate()));

    const NumericSemicircleCdf cdf(t);
    double table_err = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double x = -2.0 + 0.01 * i;
      table_err = std::max(table_err, std::fabs(cdf(x) - semicircle_cdf_analytic(x)));
    }
    c.expect(table_err <= 1e-6, "numeric CDF deviates from closed form by " + num(table_err));

    std::vector<double> xs;
    for (const auto& p : push_sequence(engine, seq)) xs.push_back(p.x[0]);
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double G = cdf(xs[i]);
      ks = std::max({ks, std::fabs(G - static_cast<double>(i + 1) / n), std::fabs(G - static_cast<double>(i) / n)});
    }
    c.expect(ks <= 0.01, "A1 KS " + num(ks));

    const auto uniform = sample_uniform_torus(t, 100000, 9100);
    const double m2 = character_moment(engine, Weight{{2}}, uniform).real();
    c.expect(std::fabs(m2 - 1.0) <= 0.02, "uniform-torus chi_2 moment " + num(m2));
    c.note("A1 mean " + num(mean) + " KS " + num(ks) + " acc " + num(seq.acceptance_rate()) + " uniform m2 " + num(m2));
  }
  if (wanted(only, GroupId::A2)) {
    const auto& t = tables_for(GroupId::A2);
    const auto seq = sample_haar(t, 100000, 9200);
    c.expect(std::fabs(seq.acceptance_rate() - 0.094) <= 0.005, "A2 acceptance " + num(seq.acceptance_rate()));
    c.note("A2 acc " + num(seq.acceptance_rate()));
  }
}

struct CriterionInfo {
  const char* name;
  double limit;
};

constexpr CriterionInfo kInfo[kCriterionCount] = {
    {"Jacobian identity", 10.0},
    {"Pushforward density", 60.0},
    {"Character engine", 120.0},
    {"Star-discrepancy correctness", 30.0},
    {"Main theorem", 300.0},
    {"Kernel lemma", 30.0},
    {"Antiderivative lemma", 10.0},
    {"Integral-operator identity", 60.0},
    {"Sampler statistics", 60.0},
};

}  // namespace

CriterionResult run_criterion(int id, std::optional<GroupId> only) {
  if (id < 1 || id > kCriterionCount) throw Error(ErrorKind::InvalidArgument, "criterion id must be 1..9");
  CriterionResult res;
  res.id = id;
  res.name = kInfo[id - 1].name;
  res.time_limit = kInfo[id - 1].limit;
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: criterion_jacobian(only, c); break;
      case 2: criterion_density(only, c); break;
      case 3: criterion_characters(only, c); break;
      case 4: criterion_discrepancy(only, c); break;
      case 5: criterion_theorem(only, c); break;
      case 6: criterion_kernel(c); break;
      case 7: criterion_antiderivative(c); break;
      case 8: criterion_intop(only, c); break;
      case 9: criterion_sampler(only, c); break;
    }
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  res.skipped = c.checks() == 0;
  c.expect(res.seconds <= res.time_limit, "runtime " + num(res.seconds) + " s over the " + num(res.time_limit) + " s budget");
  res.passed = c.ok();
  res.detail = res.skipped ? "not applicable to the selected group" : c.summary();
  return res;
}

std::vector<CriterionResult> run_acceptance(std::optional<GroupId> only) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, only));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (";
  os.precision(3);
  os << r.seconds << " s / " << r.time_limit << " s): " << r.detail;
  return os.str();
}

}  // namespace lieeq
