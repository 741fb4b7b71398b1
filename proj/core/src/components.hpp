#pragma once

// Connected pieces of a signed graph with maps back to the host ids, and the
// vertex-elimination edge plan shared by the backtracking searches.

#include <vector>

#include "monoflow/graph.hpp"

namespace monoflow::detail {

struct Piece {
  SignedGraph graph;
  std::vector<int> vertex_map;  // local -> host vertex
  std::vector<int> edge_map;    // local -> host edge
};

/// One piece per connected component, isolated vertices included.
std::vector<Piece> split_components(const SignedGraph& g);

/// Edge order for a connected graph. Vertices are eliminated one at a time
/// (fewest unassigned edges first, keeping the rest connected); the edges of
/// an eliminated vertex are listed with its last edge marked as forced by
/// that vertex. Every vertex but the last forces exactly one edge.
struct EdgePlan {
  std::vector<int> order;
  std::vector<int> forced_by;  // per position: vertex, or -1 for a free edge
};
EdgePlan make_edge_plan(const SignedGraph& g);

}  // namespace monoflow::detail
