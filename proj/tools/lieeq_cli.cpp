// lieeq: command-line front end. Reports go to stdout (or --out) as JSON or
// CSV. Exit codes: 0 success, 1 usage or input error, 2 numeric contract
// failure (a check that ran and did not hold, or a numeric error kind).

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lieeq/discrepancy.hpp"
#include "lieeq/error.hpp"
#include "lieeq/et_bound.hpp"
#include "lieeq/intop.hpp"
#include "lieeq/kernel_lab.hpp"
#include "lieeq/parallel.hpp"
#include "lieeq/sampling.hpp"
#include "lieeq/selftest.hpp"
#include "lieeq/sequence_io.hpp"
#include "lieeq/simd/kernels.hpp"
#include "lieeq/tables_json.hpp"

namespace {

using json = nlohmann::json;
using namespace lieeq;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedGroup:
    case ErrorKind::NonDominantWeight:
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument: return kExitUsage;
    default: return kExitNumeric;
  }
}

struct Common {
  std::string out;
  unsigned threads = 0;
};

void emit(const Common& common, const std::string& text) {
  if (common.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(common.out, std::ios::binary);
  if (!os) throw Error(ErrorKind::InvalidArgument, "cannot open " + common.out + " for writing");
  os << text;
}

void emit_json(const Common& common, const json& j) { emit(common, j.dump(2) + "\n"); }

GroupId group_or_throw(const std::string& label) {
  const auto g = parse_group(label);
  if (!g) throw Error(ErrorKind::UnsupportedGroup, "unknown group '" + label + "' (try list-groups)");
  return *g;
}

std::vector<std::size_t> resolve_resolution(GroupId g, int rank, const std::vector<std::size_t>& given) {
  if (given.empty()) return default_resolution(g);
  if (given.size() == 1) return std::vector<std::size_t>(static_cast<std::size_t>(rank), given[0]);
  if (given.size() != static_cast<std::size_t>(rank)) {
    throw Error(ErrorKind::InvalidArgument, "--resolution takes 1 or " + std::to_string(rank) + " values");
  }
  return given;
}

json provenance(GroupId g, const std::vector<std::size_t>& resolution, std::optional<std::uint64_t> seed,
                std::size_t corner_cap) {
  json p;
  p["group"] = std::string(to_string(g));
  p["resolution"] = resolution;
  p["seed"] = seed ? json(*seed) : json(nullptr);
  const FreudenthalLimits limits;
  p["caps"] = {{"corner_evaluations", corner_cap},
               {"weight_system_nodes", limits.node_cap},
               {"weight_system_level", limits.max_level_sum}};
  p["version"] = LIEEQ_VERSION;
  p["simd"] = std::string(simd::to_string(simd::active_backend()));
  return p;
}

json discrepancy_json(const DiscrepancyReport& r) {
  return {{"n", r.n},
          {"resolution", r.resolution},
          {"d_star", r.d_star},
          {"d_lower", r.d_lower},
          {"d_upper", r.d_upper},
          {"argmax_corner", r.argmax_corner.x},
          {"argmax_mode", r.argmax_open ? "open" : "closed"},
          {"candidates", r.candidates},
          {"mass", r.mass},
          {"quad_error_hint", r.quad_error_hint}};
}

json bound_json(const BoundReport& r) {
  json j{{"k", r.k},          {"degree", r.degree}, {"char_count", r.char_count}, {"moment_sum", r.moment_sum},
         {"c_g", r.c_g},      {"rhs", r.rhs},       {"n", r.n}};
  if (r.has_discrepancy) {
    j["d_star"] = r.d_star;
    j["d_upper"] = r.d_upper;
    j["holds"] = r.holds;
    j["margin"] = r.rhs - r.d_upper;
  }
  return j;
}

ClassSequence load_sequence(const std::string& path, std::optional<GroupId> expected) {
  ClassSequence seq = read_sequence_file(path);
  if (expected && seq.group != *expected) {
    throw Error(ErrorKind::InvalidArgument, path + " holds a " + std::string(to_string(seq.group)) +
                                                " sequence but --group is " + std::string(to_string(*expected)));
  }
  return seq;
}

std::vector<double> parse_angles(const std::vector<double>& v, int rank, const char* flag) {
  if (v.size() != static_cast<std::size_t>(rank)) {
    throw Error(ErrorKind::InvalidArgument, std::string(flag) + " needs " + std::to_string(rank) + " values");
  }
  return v;
}

std::string format_number(double x) { return format_double(x); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrepancy of conjugacy-class sequences in compact Lie groups"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "Worker thread cap (0 = all cores)");

  auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--out", common.out, "Write output to this file"); };

  // list-groups
  auto* list = app.add_subcommand("list-groups", "Summary table of the supported groups");
  bool list_json = false;
  list->add_flag("--json", list_json, "Emit JSON instead of a text table");
  bool list_full = false;
  list->add_flag("--tables", list_full, "Include full root-system tables (JSON only)");
  add_out(list);

  // sample
  auto* sample = app.add_subcommand("sample", "Generate a class sequence as CSV");
  std::string s_group, s_kind = "haar";
  std::size_t s_n = 0;
  std::uint64_t s_seed = 1;
  std::vector<double> s_v, s_theta;
  sample->add_option("--group", s_group)->required();
  sample->add_option("--kind", s_kind, "haar | uniform_torus | kronecker | constant")->capture_default_str();
  sample->add_option("-n,--n", s_n)->required();
  sample->add_option("--seed", s_seed)->capture_default_str();
  sample->add_option("--v", s_v, "Kronecker step, one angle per axis")->delimiter(',');
  sample->add_option("--theta", s_theta, "Point for the constant sequence")->delimiter(',');
  add_out(sample);

  // density
  auto* density = app.add_subcommand("density", "Quadrature mass and density of the pushforward measure");
  std::string d_group;
  std::vector<std::size_t> d_res;
  std::string d_csv;
  density->add_option("--group", d_group)->required();
  density->add_option("--resolution", d_res, "Nodes per axis (one value or one per axis)")->delimiter(',');
  density->add_option("--csv", d_csv, "Also write pushed nodes (x..., weight, F) to this CSV");
  add_out(density);

  // discrepancy
  auto* disc = app.add_subcommand("discrepancy", "Star discrepancy of a sequence");
  std::string q_group, q_seq;
  std::vector<std::size_t> q_res;
  std::size_t q_cap = kDefaultCornerCap;
  disc->add_option("--group", q_group);
  disc->add_option("--seq", q_seq)->required();
  disc->add_option("--resolution", q_res)->delimiter(',');
  disc->add_option("--corner-cap", q_cap)->capture_default_str();
  add_out(disc);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check the discrepancy bound for one k");
  std::string v_group, v_seq;
  std::vector<std::size_t> v_res;
  int v_k = 1;
  std::size_t v_cap = kDefaultCornerCap;
  verify_cmd->add_option("--group", v_group);
  verify_cmd->add_option("--seq", v_seq)->required();
  verify_cmd->add_option("--k", v_k)->required();
  verify_cmd->add_option("--resolution", v_res)->delimiter(',');
  verify_cmd->add_option("--corner-cap", v_cap)->capture_default_str();
  add_out(verify_cmd);

  // bound-table
  auto* table = app.add_subcommand("bound-table", "CSV of bound reports over several k");
  std::string b_group, b_seq;
  std::vector<std::size_t> b_res;
  std::vector<int> b_ks{1, 3, 5, 9};
  std::size_t b_cap = kDefaultCornerCap;
  table->add_option("--group", b_group);
  table->add_option("--seq", b_seq)->required();
  table->add_option("--k-list", b_ks)->delimiter(',')->capture_default_str();
  table->add_option("--resolution", b_res)->delimiter(',');
  table->add_option("--corner-cap", b_cap)->capture_default_str();
  add_out(table);

  // kernel-check
  auto* kcheck = app.add_subcommand("kernel-check", "Chebyshev kernel sandwich, tail and sup-norm checks");
  std::string k_group;
  std::vector<int> k_list{3, 5, 9};
  std::size_t k_points = 41;
  kcheck->add_option("--group", k_group)->required();
  kcheck->add_option("--k", k_list, "Odd kernel degrees")->delimiter(',')->capture_default_str();
  kcheck->add_option("--sup-points", k_points, "Grid points per axis for the sup-norm check")->capture_default_str();
  add_out(kcheck);

  // intop-check
  auto* icheck = app.add_subcommand("intop-check", "Integration-by-parts identity residual");
  std::string i_group, i_seq, i_poly;
  std::vector<std::size_t> i_res;
  std::size_t i_xres = 0;
  double i_tol = -1.0;
  icheck->add_option("--group", i_group);
  icheck->add_option("--seq", i_seq)->required();
  icheck->add_option("--poly", i_poly, "Polynomial in x1..xr, e.g. \"x1^2 + 3*x1*x2\"")->required();
  icheck->add_option("--resolution", i_res)->delimiter(',');
  icheck->add_option("--x-resolution", i_xres, "Cells per axis of the x-grid (0 = default)");
  icheck->add_option("--tol", i_tol, "Residual tolerance (default 1e-3 for rank 1, 5e-3 otherwise)");
  add_out(icheck);

  // selftest
  auto* self = app.add_subcommand("selftest", "Run the acceptance criteria");
  std::string t_group;
  std::vector<int> t_ids;
  self->add_option("--group", t_group, "Restrict to checks involving this group");
  self->add_option("--criterion", t_ids, "Criterion ids (default all)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    set_max_threads(common.threads);

    if (list->parsed()) {
      if (list_json) {
        json rows = json::array();
        for (GroupId g : all_groups()) {
          const auto t = build_tables(g);
          json row{{"group", std::string(to_string(g))}, {"r", t.rank},          {"r1", t.r1},
                   {"r2", t.r2},                         {"M", t.M},             {"dimG", t.dim_g},
                   {"W", t.weyl_order()},                {"C_G", constant_CG(t)}};
          if (list_full) row["tables"] = tables_to_json(t);
          rows.push_back(std::move(row));
        }
        emit_json(common, {{"schema", "lieeq.groups/1"}, {"version", LIEEQ_VERSION}, {"groups", rows}});
      } else {
        std::ostringstream os;
        os << "group  r  r1  r2   M  dimG   |W|  C_G\n";
        for (GroupId g : all_groups()) {
          const auto t = build_tables(g);
          char line[128];
          std::snprintf(line, sizeof line, "%-5s %2d %3d %3d %3lld %5d %5zu  %.6e\n", std::string(to_string(g)).c_str(),
                        t.rank, t.r1, t.r2, static_cast<long long>(t.M), t.dim_g, t.weyl_order(), constant_CG(t));
          os << line;
        }
        emit(common, os.str());
      }
      return kExitOk;
    }

    if (sample->parsed()) {
      const auto t = build_tables(group_or_throw(s_group));
      const auto kind = parse_provenance(s_kind);
      ClassSequence seq;
      if (!kind || *kind == Provenance::File) throw Error(ErrorKind::InvalidArgument, "unknown --kind '" + s_kind + "'");
      switch (*kind) {
        case Provenance::Haar: seq = sample_haar(t, s_n, s_seed); break;
        case Provenance::UniformTorus: seq = sample_uniform_torus(t, s_n, s_seed); break;
        case Provenance::Kronecker: seq = kronecker_sequence(t, s_n, parse_angles(s_v, t.rank, "--v")); break;
        case Provenance::Constant:
          seq = constant_sequence(t, s_n, TorusPoint(parse_angles(s_theta, t.rank, "--theta")));
          break;
        case Provenance::File: break;
      }
      emit(common, sequence_to_csv(seq));
      return kExitOk;
    }

    if (density->parsed()) {
      const auto g = group_or_throw(d_group);
      const auto t = build_tables(g);
      const CharacterEngine engine(t);
      const auto res = resolve_resolution(g, t.rank, d_res);
      const auto grid = build_quadrature(engine, res);
      double sup = 0.0;
      std::ostringstream csv;
      if (!d_csv.empty()) {
        for (int j = 1; j <= t.rank; ++j) csv << 'x' << j << ',';
        csv << "weight,F\n";
      }
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double F = density_F(t, grid.node(i));
        sup = std::max(sup, F);
        if (!d_csv.empty()) {
          for (int j = 0; j < t.rank; ++j) csv << format_number(grid.pushed[i * static_cast<std::size_t>(t.rank) + static_cast<std::size_t>(j)]) << ',';
          csv << format_number(grid.weights[i]) << ',' << format_number(F) << '\n';
        }
      }
      if (!d_csv.empty()) {
        std::ofstream os(d_csv, std::ios::binary);
        if (!os) throw Error(ErrorKind::InvalidArgument, "cannot open " + d_csv + " for writing");
        os << csv.str();
      }
      const double bound = density_sup_bound(t);
      emit_json(common, {{"schema", "lieeq.density/1"},
                         {"provenance", provenance(g, res, std::nullopt, 0)},
                         {"nodes", grid.size()},
                         {"mass", grid.mass},
                         {"sup_F", sup},
                         {"sup_F_bound", bound},
                         {"max_weight", grid.max_weight}});
      return sup <= bound + 1e-9 && std::fabs(grid.mass - 1.0) <= 1e-3 ? kExitOk : kExitNumeric;
    }

    auto seq_group = [](const std::string& label) -> std::optional<GroupId> {
      if (label.empty()) return std::nullopt;
      return group_or_throw(label);
    };

    if (disc->parsed()) {
      const auto seq = load_sequence(q_seq, seq_group(q_group));
      const auto t = build_tables(seq.group);
      const CharacterEngine engine(t);
      const auto res = resolve_resolution(seq.group, t.rank, q_res);
      const auto grid = build_quadrature(engine, res);
      const auto rep = star_discrepancy(grid, engine, seq, q_cap);
      json j = discrepancy_json(rep);
      j["schema"] = "lieeq.discrepancy/1";
      j["provenance"] = provenance(seq.group, res, seq.seed, q_cap);
      j["provenance"]["sequence"] = std::string(to_string(seq.provenance));
      emit_json(common, j);
      return kExitOk;
    }

    if (verify_cmd->parsed() || table->parsed()) {
      const bool is_table = table->parsed();
      const auto seq = load_sequence(is_table ? b_seq : v_seq, seq_group(is_table ? b_group : v_group));
      const auto t = build_tables(seq.group);
      const CharacterEngine engine(t);
      const auto res = resolve_resolution(seq.group, t.rank, is_table ? b_res : v_res);
      const std::size_t cap = is_table ? b_cap : v_cap;
      const auto grid = build_quadrature(engine, res);
      const auto disc_rep = star_discrepancy(grid, engine, seq, cap);
      auto finish = [&](int k) {
        BoundReport rep = rhs_bound(engine, seq, k);
        rep.discrepancy = disc_rep;
        rep.has_discrepancy = true;
        rep.d_star = disc_rep.d_star;
        rep.d_upper = disc_rep.d_upper;
        rep.holds = rep.d_upper <= rep.rhs;
        return rep;
      };
      if (!is_table) {
        const auto rep = finish(v_k);
        json j = bound_json(rep);
        j["schema"] = "lieeq.bound/1";
        j["group"] = std::string(to_string(seq.group));
        j["discrepancy"] = discrepancy_json(disc_rep);
        j["provenance"] = provenance(seq.group, res, seq.seed, cap);
        j["provenance"]["sequence"] = std::string(to_string(seq.provenance));
        emit_json(common, j);
        return rep.holds ? kExitOk : kExitNumeric;
      }
      std::ostringstream os;
      os << "group,n,k,degree,char_count,moment_sum,c_g,rhs,d_star,d_upper,holds\n";
      bool all = true;
      for (int k : b_ks) {
        const auto rep = finish(k);
        all = all && rep.holds;
        os << to_string(seq.group) << ',' << rep.n << ',' << rep.k << ',' << rep.degree << ',' << rep.char_count << ','
           << format_number(rep.moment_sum) << ',' << format_number(rep.c_g) << ',' << format_number(rep.rhs) << ','
           << format_number(rep.d_star) << ',' << format_number(rep.d_upper) << ',' << (rep.holds ? "true" : "false")
           << '\n';
      }
      emit(common, os.str());
      return all ? kExitOk : kExitNumeric;
    }

    if (kcheck->parsed()) {
      const auto g = group_or_throw(k_group);
      const auto t = build_tables(g);
      const double M = static_cast<double>(t.M);
      const double rs = std::sqrt(static_cast<double>(t.rank));
      json rows = json::array();
      bool all = true;
      for (int k : k_list) {
        const auto p = make_kernel_params(t.rank, M, k);
        for (double factor : {0.5, 1.0, 1.2}) {
          const double c = factor * M * rs;
          const auto mass = kernel_mass_inner(p, c);
          const auto tail = kernel_tail(p, c / k);
          all = all && mass.holds && tail.holds;
          rows.push_back({{"k", k},
                          {"c_factor", factor},
                          {"c", c},
                          {"lower", mass.lower},
                          {"integral", mass.integral},
                          {"upper", mass.upper},
                          {"lower_margin", mass.integral - mass.lower},
                          {"upper_margin", mass.upper - mass.integral},
                          {"sandwich_holds", mass.holds},
                          {"tail_t", c / k},
                          {"tail_integral", tail.integral},
                          {"tail_bound", tail.bound},
                          {"tail_margin", tail.bound - tail.integral},
                          {"tail_holds", tail.holds}});
        }
      }
      json sups = json::array();
      if (t.rank <= 2) {
        for (int k : k_list) {
          const auto p = make_kernel_params(t.rank, M, k);
          const std::vector<double> v(static_cast<std::size_t>(t.rank), 0.0);
          const auto sup = sup_h_check(p, v, k_points);
          all = all && sup.holds;
          sups.push_back({{"k", k}, {"v", v}, {"sup_abs_h", sup.sup_abs_h}, {"bound", sup.bound}, {"holds", sup.holds}});
        }
      }
      emit_json(common, {{"schema", "lieeq.kernel/1"},
                         {"group", std::string(to_string(g))},
                         {"r", t.rank},
                         {"M", t.M},
                         {"vol_sphere", vol_sphere(t.rank)},
                         {"mass_and_tail", rows},
                         {"sup_h", sups},
                         {"version", LIEEQ_VERSION}});
      return all ? kExitOk : kExitNumeric;
    }

    if (icheck->parsed()) {
      const auto seq = load_sequence(i_seq, seq_group(i_group));
      const auto t = build_tables(seq.group);
      const CharacterEngine engine(t);
      const auto res = resolve_resolution(seq.group, t.rank, i_res);
      const auto grid = build_quadrature(engine, res);
      const auto h = parse_poly(i_poly, t.rank);
      const auto rep = integral_operator_residual(grid, engine, seq, h, i_xres);
      const double tol = i_tol > 0 ? i_tol : (t.rank == 1 ? 1e-3 : 5e-3);
      json faces = json::object();
      for (std::size_t J = 1; J < rep.face_terms.size(); ++J) faces[std::to_string(J)] = rep.face_terms[J];
      emit_json(common, {{"schema", "lieeq.intop/1"},
                         {"poly", to_string(h)},
                         {"lhs", rep.lhs},
                         {"rhs", rep.rhs},
                         {"sample_mean", rep.sample_mean},
                         {"mu_integral", rep.mu_integral},
                         {"face_terms", faces},
                         {"residual", rep.residual},
                         {"tolerance", tol},
                         {"x_resolution", rep.x_resolution},
                         {"provenance", provenance(seq.group, res, seq.seed, 0)}});
      return rep.residual <= tol ? kExitOk : kExitNumeric;
    }

    if (self->parsed()) {
      std::optional<GroupId> only;
      if (!t_group.empty()) only = group_or_throw(t_group);
      if (t_ids.empty()) {
        for (int i = 1; i <= kCriterionCount; ++i) t_ids.push_back(i);
      }
      bool all = true;
      for (int id : t_ids) {
        const auto r = run_criterion(id, only);
        std::cout << format_result(r) << std::endl;
        all = all && r.passed;
      }
      return all ? kExitOk : kExitNumeric;
    }
  } catch (const Error& e) {
    std::cerr << "lieeq: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "lieeq: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
