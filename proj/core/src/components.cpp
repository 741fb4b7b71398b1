#include "components.hpp"

#include <algorithm>

namespace monoflow::detail {

std::vector<Piece> split_components(const SignedGraph& g) {
  std::vector<int> label = component_labels(g);
  int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<Piece> pieces(count);
  std::vector<int> local(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    local[v] = static_cast<int>(pieces[label[v]].vertex_map.size());
    pieces[label[v]].vertex_map.push_back(v);
  }
  for (Piece& piece : pieces) piece.graph = SignedGraph(static_cast<int>(piece.vertex_map.size()));
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    Piece& piece = pieces[label[edge.u]];
    piece.graph.add_edge(local[edge.u], local[edge.w], edge.sign);
    piece.edge_map.push_back(e);
  }
  return pieces;
}

namespace {

bool stays_connected(const SignedGraph& g, const std::vector<bool>& alive, int removed) {
  int start = -1;
  int alive_count = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (alive[v] && v != removed) {
      ++alive_count;
      if (start < 0) start = v;
    }
  }
  if (alive_count <= 1) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : g.incident(v)) {
      int x = g.edge(e).other(v);
      if (!alive[x] || x == removed || seen[x]) continue;
      seen[x] = true;
      ++reached;
      stack.push_back(x);
    }
  }
  return reached == alive_count;
}

}  // namespace

EdgePlan make_edge_plan(const SignedGraph& g) {
  const int n = g.vertex_count();
  std::vector<bool> alive(n, true);
  std::vector<bool> assigned(g.edge_count(), false);
  EdgePlan plan;
  for (int round = 0; round + 1 < n; ++round) {
    int best = -1;
    int best_degree = 0;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      int open = 0;
      for (int e : g.incident(v)) open += assigned[e] ? 0 : 1;
      if (open == 0) continue;
      if (best >= 0 && open >= best_degree) continue;
      if (!stays_connected(g, alive, v)) continue;
      best = v;
      best_degree = open;
    }
    if (best < 0) break;
    std::vector<int> open_edges;
    for (int e : g.incident(best)) {
      if (!assigned[e]) open_edges.push_back(e);
    }
    std::sort(open_edges.begin(), open_edges.end());
    for (std::size_t i = 0; i < open_edges.size(); ++i) {
      plan.order.push_back(open_edges[i]);
      plan.forced_by.push_back(i + 1 == open_edges.size() ? best : -1);
      assigned[open_edges[i]] = true;
    }
    alive[best] = false;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!assigned[e]) {
      plan.order.push_back(e);
      plan.forced_by.push_back(-1);
    }
  }
  return plan;
}

}  // namespace monoflow::detail
