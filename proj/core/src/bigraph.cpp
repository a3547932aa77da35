#include "depthkit/bigraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "depthkit/errors.hpp"

namespace depthkit {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// Multi-source BFS over the bipartite graph. Returns distances to the white
// vertices; sources are white vertices at distance 0.
std::vector<std::size_t> white_distances(InclusionGraph const& g,
                                         std::vector<std::size_t> const& sources) {
  std::vector<std::size_t> dw(g.white(), kUnreached);
  std::vector<std::size_t> db(g.black(), kUnreached);
  std::deque<std::size_t> queue;  // white vertices only; blacks are relayed
  for (std::size_t s : sources) {
    if (dw[s] == kUnreached) {
      dw[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    std::size_t w = queue.front();
    queue.pop_front();
    for (std::size_t b : g.white_neighbors(w)) {
      if (db[b] != kUnreached) continue;
      db[b] = dw[w] + 1;
      for (std::size_t w2 : g.black_neighbors(b)) {
        if (dw[w2] == kUnreached) {
          dw[w2] = db[b] + 1;
          queue.push_back(w2);
        }
      }
    }
  }
  return dw;
}

std::size_t max_reached(std::vector<std::size_t> const& d) {
  std::size_t best = 0;
  for (auto x : d) {
    if (x != kUnreached) best = std::max(best, x);
  }
  return best;
}

}  // namespace

InclusionGraph::InclusionGraph(std::size_t white, std::size_t black,
                               std::set<Edge> edges)
    : white_(white),
      black_(black),
      edges_(std::move(edges)),
      white_adj_(white),
      black_adj_(black) {
  if (white == 0 || black == 0) {
    throw ValidationError("inclusion graph needs at least one vertex per row");
  }
  for (auto [w, b] : edges_) {
    if (w >= white || b >= black) throw ValidationError("edge endpoint out of range");
    white_adj_[w].push_back(b);
    black_adj_[b].push_back(w);
  }
  for (std::size_t w = 0; w < white; ++w) {
    if (white_adj_[w].empty()) {
      throw ValidationError("white vertex " + std::to_string(w + 1) + " has no edge");
    }
  }
  for (std::size_t b = 0; b < black; ++b) {
    if (black_adj_[b].empty()) {
      throw ValidationError("black vertex " + std::to_string(b + 1) + " has no edge");
    }
  }
}

InclusionGraph InclusionGraph::from_matrix(NonNegMatrix const& m) {
  std::set<Edge> edges;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) > 0) edges.emplace(i, j);
  return InclusionGraph(m.rows(), m.cols(), std::move(edges));
}

bool InclusionGraph::connected() const {
  auto d = white_distances(*this, {0});
  return std::none_of(d.begin(), d.end(), [](auto x) { return x == kUnreached; });
}

std::size_t odd_depth(InclusionGraph const& g) {
  std::size_t diameter = 0;
  for (std::size_t w = 0; w < g.white(); ++w) {
    diameter = std::max(diameter, max_reached(white_distances(g, {w})));
  }
  return diameter + 1;
}

std::size_t even_depth(InclusionGraph const& g) {
  std::size_t diameter = 0;
  for (std::size_t b = 0; b < g.black(); ++b) {
    diameter = std::max(diameter, max_reached(white_distances(g, g.black_neighbors(b))));
  }
  return diameter + 2;
}

GraphDepths graph_depths(InclusionGraph const& g) {
  return {odd_depth(g), even_depth(g)};
}

std::string to_dot(InclusionGraph const& g, std::optional<DotLabels> const& labels) {
  if (labels && (labels->white.size() != g.white() || labels->black.size() != g.black())) {
    throw ValidationError("label count does not match vertex count");
  }
  std::ostringstream os;
  os << "graph inclusion {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle, label=\"\", width=0.3];\n";
  os << "  subgraph bottom {\n    rank=same;\n";
  for (std::size_t w = 0; w < g.white(); ++w) {
    os << "    w" << w + 1 << " [style=solid";
    if (labels) os << ", xlabel=\"" << labels->white[w] << "\"";
    os << "];\n";
  }
  os << "  }\n";
  os << "  subgraph top {\n    rank=same;\n";
  for (std::size_t b = 0; b < g.black(); ++b) {
    os << "    b" << b + 1 << " [style=filled, fillcolor=black";
    if (labels) os << ", xlabel=\"" << labels->black[b] << "\"";
    os << "];\n";
  }
  os << "  }\n";
  for (auto [w, b] : g.edges()) {
    os << "  w" << w + 1 << " -- b" << b + 1 << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace depthkit
