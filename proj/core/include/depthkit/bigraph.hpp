#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "depthkit/exact_matrix.hpp"

namespace depthkit {

// Bipartite inclusion graph. White vertices (bottom row) are the S-simples,
// black vertices (top row) the R-simples; an edge joins white i and black j
// when the inclusion matrix has a nonzero (i, j) entry. Indices are 0-based.
class InclusionGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // (white, black)

  InclusionGraph(std::size_t white, std::size_t black, std::set<Edge> edges);

  static InclusionGraph from_matrix(NonNegMatrix const& m);

  std::size_t white() const noexcept { return white_; }
  std::size_t black() const noexcept { return black_; }
  std::set<Edge> const& edges() const noexcept { return edges_; }

  std::vector<std::size_t> const& white_neighbors(std::size_t w) const {
    return white_adj_[w];
  }
  std::vector<std::size_t> const& black_neighbors(std::size_t b) const {
    return black_adj_[b];
  }

  bool connected() const;

 private:
  std::size_t white_;
  std::size_t black_;
  std::set<Edge> edges_;
  std::vector<std::vector<std::size_t>> white_adj_;
  std::vector<std::vector<std::size_t>> black_adj_;
};

// 1 + the largest edge distance between two white vertices lying in the same
// connected component.
std::size_t odd_depth(InclusionGraph const& g);

// 2 + the largest bottom-row diameter obtained by identifying the white
// neighbours of a single black vertex into one vertex; the diameter is
// measured from the identified vertex within its component.
std::size_t even_depth(InclusionGraph const& g);

struct GraphDepths {
  std::size_t odd = 0;
  std::size_t even = 0;
  std::size_t min() const { return odd < even ? odd : even; }
};

GraphDepths graph_depths(InclusionGraph const& g);

struct DotLabels {
  std::vector<std::string> white;
  std::vector<std::string> black;
};

std::string to_dot(InclusionGraph const& g,
                   std::optional<DotLabels> const& labels = std::nullopt);

// {"white": n, "black": m, "edges": [[i, j], ...]} with 1-based indices.
std::string to_json(InclusionGraph const& g, bool pretty = false);

}  // namespace depthkit
