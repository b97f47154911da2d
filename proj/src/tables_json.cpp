#include "lieeq/tables_json.hpp"

namespace lieeq {

namespace {

nlohmann::json matrix_json(const IntMatrix& m) {
  auto rows = nlohmann::json::array();
  for (int i = 0; i < m.size(); ++i) {
    auto row = nlohmann::json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::json tables_to_json(const RootSystemTables& t) {
  nlohmann::json j;
  j["schema"] = "lieeq.tables/1";
  j["group"] = std::string(to_string(t.group));
  j["rank"] = t.rank;
  j["cartan"] = matrix_json(t.cartan);
  j["symmetrizer"] = t.symmetrizer;
  auto roots = nlohmann::json::array();
  for (const auto& r : t.positive_roots) roots.push_back({{"simple", r.simple_coords}, {"fw", r.fw_coords}});
  j["positive_roots"] = std::move(roots);
  auto weyl = nlohmann::json::array();
  std::size_t w0_index = 0;
  for (std::size_t i = 0; i < t.weyl.size(); ++i) {
    const auto& w = t.weyl[i];
    weyl.push_back({{"matrix", matrix_json(w.matrix)}, {"sign", w.sign}, {"length", w.length}});
    if (w.matrix == t.w0.matrix) w0_index = i;
  }
  j["weyl"] = std::move(weyl);
  j["w0"] = w0_index;
  j["rho"] = t.rho.coords;
  auto fund = nlohmann::json::array();
  for (const auto& f : t.fundamental) {
    fund.push_back({{"dimension", f.dimension}, {"dual_index", f.dual_index}, {"self_dual", f.is_self_dual}});
  }
  j["fundamental"] = std::move(fund);
  j["r1"] = t.r1;
  j["r2"] = t.r2;
  j["M"] = t.M;
  j["dim_g"] = t.dim_g;
  return j;
}

}  // namespace lieeq
