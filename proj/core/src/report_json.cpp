// JSON serializers. Keys keep insertion order so output is byte-stable.
#include <json.hpp>

#include "depthkit/bigraph.hpp"
#include "depthkit/comb_depth.hpp"
#include "depthkit/depth.hpp"
#include "depthkit/tower_verify.hpp"

namespace depthkit {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(Json const& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

Json support_json(SupportMatrix const& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string to_json(DepthReport const& report, bool pretty) {
  Json j;
  j["min_depth"] = report.min_depth;
  j["min_odd_depth"] = report.min_odd_depth;
  j["min_even_depth"] = report.min_even_depth;
  j["stabilization_level"] = report.stabilization_level;
  if (report.ideal_rows) {
    Json rows = Json::array();
    for (std::size_t r : *report.ideal_rows) rows.push_back(r + 1);
    j["ideal_rows"] = std::move(rows);
  }
  if (report.graph_discrepancy) j["graph_discrepancy"] = true;
  Json supports = Json::array();
  for (auto const& s : report.per_level_supports) supports.push_back(support_json(s));
  j["per_level_supports"] = std::move(supports);
  return dump(j, pretty);
}

std::string to_json(InclusionGraph const& g, bool pretty) {
  Json j;
  j["white"] = g.white();
  j["black"] = g.black();
  Json edges = Json::array();
  for (auto const& [w, b] : g.edges()) edges.push_back(Json::array({w + 1, b + 1}));
  j["edges"] = std::move(edges);
  return dump(j, pretty);
}

std::string to_json(CombDepthResult const& result, std::size_t normalizer_bound, bool pretty) {
  Json j;
  if (result.depth) {
    j["d_c"] = *result.depth;
  } else {
    j["d_c"] = nullptr;
  }
  j["lower_bound"] = result.lower_bound;
  j["normalizer_bound"] = normalizer_bound;
  j["normal"] = result.normal;
  if (result.improper_pair) j["improper_pair"] = true;
  return dump(j, pretty);
}

std::string to_json(TowerReport const& report, bool pretty) {
  Json j;
  j["max_level"] = report.max_level;
  j["seed"] = report.seed;
  j["all_passed"] = report.all_passed();
  Json checks = Json::array();
  for (auto const& c : report.checks) {
    Json item;
    item["name"] = c.name;
    item["levels_checked"] = c.levels_checked;
    item["status"] = c.passed ? "pass" : "fail";
    item["cases"] = c.cases;
    item["sampled"] = c.sampled;
    if (c.counterexample) item["counterexample"] = *c.counterexample;
    checks.push_back(std::move(item));
  }
  j["identities"] = std::move(checks);
  return dump(j, pretty);
}

}  // namespace depthkit
