#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "depthkit/bigraph.hpp"
#include "depthkit/comb_depth.hpp"
#include "depthkit/depth.hpp"
#include "depthkit/errors.hpp"
#include "depthkit/exact_matrix.hpp"
#include "depthkit/frobenius.hpp"
#include "depthkit/partition.hpp"
#include "depthkit/perm_group.hpp"
#include "depthkit/tower.hpp"
#include "depthkit/tower_verify.hpp"

namespace depthkit::cli {

namespace {

using Json = nlohmann::ordered_json;

std::size_t parse_count(std::string const& text, char const* what) {
  if (text.empty() || text.size() > 9 ||
      !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError(std::string("invalid ") + what + " '" + text + "'");
  }
  return std::stoul(text);
}

std::size_t max_group_order() {
  char const* env = std::getenv("DEPTHKIT_MAX_GROUP");
  if (!env || !*env) return kDefaultMaxGroup;
  std::size_t v = parse_count(env, "DEPTHKIT_MAX_GROUP");
  if (v == 0) throw ParseError("DEPTHKIT_MAX_GROUP must be positive");
  return v;
}

// "1,3,4" -> {0, 2, 3}
std::vector<std::size_t> parse_ideal(std::string const& text) {
  std::vector<std::size_t> cols;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t c = parse_count(item, "ideal column");
    if (c == 0) throw ParseError("ideal columns are 1-based");
    cols.push_back(c - 1);
  }
  if (cols.empty()) throw ParseError("empty ideal column list");
  return cols;
}

void write_file(std::string const& path, std::string const& text) {
  std::ofstream f(path);
  if (!f) throw ResourceError("cannot write '" + path + "'");
  f << text;
  if (!f) throw ResourceError("write to '" + path + "' failed");
}

void emit(std::ostream& out, Json const& j, bool pretty) {
  out << (pretty ? j.dump(2) : j.dump()) << '\n';
}

Json matrix_json(NonNegMatrix const& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  // Small entries print as numbers; bigints stay strings.
  for (auto& row : rows) {
    for (auto& v : row) {
      std::string s = v.get<std::string>();
      if (s.size() < 16) v = std::stoull(s);
    }
  }
  return rows;
}

// Matrix-method report, cross-checked against the graph reading.
DepthReport checked_depth(NonNegMatrix const& m, std::optional<IdealSpec> const& ideal) {
  DepthReport report = ideal ? ideal_depth(m, *ideal) : min_depth(m);
  NonNegMatrix const sub =
      ideal ? m.submatrix(*report.ideal_rows,
                          [&] {
                            auto c = ideal->ideal_cols;
                            std::sort(c.begin(), c.end());
                            c.erase(std::unique(c.begin(), c.end()), c.end());
                            return c;
                          }())
            : m;
  GraphDepths const g = graph_depths(InclusionGraph::from_matrix(sub));
  report.graph_discrepancy = g.odd != report.min_odd_depth || g.even != report.min_even_depth;
  return report;
}

struct Options {
  bool pretty = false;
  std::string path;
  std::string ideal;
  std::string dot;
  std::string matrix_out;
  std::size_t n = 0;
  std::size_t cap = CombDepthOptions{}.cap;
  std::optional<std::size_t> level;
  std::uint64_t seed = 0;
  bool corrupt = false;
};

int run_depth(Options const& o, std::ostream& out) {
  NonNegMatrix const m = read_matrix_file(o.path);
  std::optional<IdealSpec> ideal;
  if (!o.ideal.empty()) ideal = IdealSpec{parse_ideal(o.ideal)};
  DepthReport const report = checked_depth(m, ideal);
  if (!o.dot.empty()) write_file(o.dot, to_dot(InclusionGraph::from_matrix(m)));
  emit(out, Json::parse(to_json(report)), o.pretty);
  return kOk;
}

int run_sym(Options const& o, std::ostream& out) {
  if (o.n < 1 || o.n > kDefaultMaxSym) {
    throw ValidationError("n must lie in 1.." + std::to_string(kDefaultMaxSym));
  }
  NonNegMatrix const m = branching_matrix(o.n);
  DepthReport const report = checked_depth(m, std::nullopt);
  DotLabels labels;
  Json rows = Json::array();
  Json cols = Json::array();
  for (auto const& p : partitions(o.n)) {
    labels.white.push_back(p.to_string());
    rows.push_back(p.to_string());
  }
  for (auto const& p : partitions(o.n + 1)) {
    labels.black.push_back(p.to_string());
    cols.push_back(p.to_string());
  }
  if (!o.matrix_out.empty()) write_file(o.matrix_out, format_matrix(m));
  if (!o.dot.empty()) write_file(o.dot, to_dot(InclusionGraph::from_matrix(m), labels));
  Json j;
  j["n"] = o.n;
  j["rows"] = std::move(rows);
  j["cols"] = std::move(cols);
  j["matrix"] = matrix_json(m);
  j["depth"] = Json::parse(to_json(report));
  emit(out, j, o.pretty);
  return kOk;
}

int run_graph(Options const& o, std::ostream& out) {
  NonNegMatrix const m = read_matrix_file(o.path);
  require_inclusion_matrix(m);
  InclusionGraph const g = InclusionGraph::from_matrix(m);
  GraphDepths const d = graph_depths(g);
  if (!o.dot.empty()) write_file(o.dot, to_dot(g));
  Json j = Json::parse(to_json(g));
  j["connected"] = g.connected();
  j["odd_depth"] = d.odd;
  j["even_depth"] = d.even;
  j["min_depth"] = d.min();
  emit(out, j, o.pretty);
  return kOk;
}

int run_combdepth(Options const& o, std::ostream& out) {
  GroupSpec const spec = read_group_spec_file(o.path);
  std::size_t const guard = max_group_order();
  GroupPair const pair = build_pair(spec, guard);
  CombDepthResult const r =
      combinatorial_depth(pair.group, pair.subgroup, CombDepthOptions{o.cap, guard});
  std::size_t const bound = normalizer_bound(pair.group, pair.subgroup);
  Json j = Json::parse(to_json(r, bound));
  j["group_order"] = pair.group.order();
  j["subgroup_order"] = pair.subgroup.order();
  emit(out, j, o.pretty);
  return kOk;
}

int run_tower(Options const& o, std::ostream& out) {
  GroupSpec const spec = read_group_spec_file(o.path);
  std::size_t const level = o.level.value_or(spec.level.value_or(3));
  if (level < 2) throw ValidationError("tower level must be at least 2");
  GroupPair pair = build_pair(spec, max_group_order());
  auto group = std::make_shared<PermGroup const>(std::move(pair.group));
  FrobeniusSystem system = FrobeniusSystem::standard(group, pair.subgroup);
  if (o.corrupt) {
    auto y = system.y();
    y.front() *= 2;
    system = system.with_dual_bases(system.x(), std::move(y));
  }
  Tower const tower(std::move(system));
  TowerReport const report = verify_relations(tower, VerifyOptions{level, o.seed});
  emit(out, Json::parse(to_json(report)), o.pretty);
  return report.all_passed() ? kOk : kVerificationFailed;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Depth of subring pairs, symmetric-group chains and Frobenius towers",
               "depthkit"};
  app.require_subcommand(1, 1);
  Options o;
  auto pretty = [&](CLI::App* sub) {
    sub->add_flag("--json", o.pretty, "Pretty-print the JSON report");
  };

  auto* depth = app.add_subcommand("depth", "Minimum, odd, even and ideal depth of a matrix");
  depth->add_option("matrix", o.path, "Inclusion matrix file")->required();
  depth->add_option("--ideal", o.ideal, "Ideal columns, 1-based, comma separated");
  depth->add_option("--dot", o.dot, "Write the inclusion graph as DOT");
  pretty(depth);

  auto* sym = app.add_subcommand("sym", "Branching matrix of S_n in S_{n+1} and its depth");
  sym->add_option("n", o.n, "n")->required();
  sym->add_option("--dot", o.dot, "Write the inclusion graph as DOT");
  sym->add_option("--matrix-out", o.matrix_out, "Write the branching matrix file");
  pretty(sym);

  auto* graph = app.add_subcommand("graph", "Odd and even depth read off the bipartite graph");
  graph->add_option("matrix", o.path, "Inclusion matrix file")->required();
  graph->add_option("--dot", o.dot, "Write the inclusion graph as DOT");
  pretty(graph);

  auto* comb = app.add_subcommand("combdepth", "Brute-force combinatorial depth of H in G");
  comb->add_option("groups", o.path, "Group pair file")->required();
  comb->add_option("--cap", o.cap, "Largest depth tested")->check(CLI::Range(2, 64));
  pretty(comb);

  auto* tower = app.add_subcommand("tower", "Verify the tower identities above Q[H] in Q[G]");
  tower->add_option("groups", o.path, "Group pair file")->required();
  tower->add_option("--level", o.level, "Highest tower level (default: file, else 3)");
  tower->add_option("--seed", o.seed, "Seed for sampled identity checks");
  tower->add_flag("--corrupt-dual-basis", o.corrupt)->group("");
  pretty(tower);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (app.got_subcommand(depth)) return run_depth(o, out);
    if (app.got_subcommand(sym)) return run_sym(o, out);
    if (app.got_subcommand(graph)) return run_graph(o, out);
    if (app.got_subcommand(comb)) return run_combdepth(o, out);
    return run_tower(o, out);
  } catch (ParseError const& e) {
    err << "depthkit: parse error: " << e.what() << '\n';
    return kParseError;
  } catch (ValidationError const& e) {
    err << "depthkit: invalid input: " << e.what() << '\n';
    return kValidationError;
  } catch (ResourceError const& e) {
    err << "depthkit: resource limit: " << e.what() << '\n';
    return kResourceError;
  }
}

}  // namespace depthkit::cli
