#include "generators.hpp"

#include <algorithm>
#include <numeric>

namespace monoflow::testing {

namespace {

Sign random_sign(std::mt19937& rng) {
  return std::bernoulli_distribution(0.5)(rng) ? Sign::Positive : Sign::Negative;
}

}  // namespace

SignedGraph random_signed_graph(std::mt19937& rng, int n, int m) {
  SignedGraph g(n);
  if (n < 2) return g;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < m; ++i) {
    int u = pick(rng);
    int w = pick(rng);
    while (w == u) w = pick(rng);
    g.add_edge(u, w, random_sign(rng));
  }
  return g;
}

SignedGraph random_connected_graph(std::mt19937& rng, int n, int m) {
  SignedGraph g(n);
  for (int v = 1; v < n; ++v) {
    int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
    g.add_edge(parent, v, random_sign(rng));
  }
  if (n < 2) return g;
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (g.edge_count() < m) {
    int u = pick(rng);
    int w = pick(rng);
    if (u != w) g.add_edge(u, w, random_sign(rng));
  }
  return g;
}

SignedGraph random_eulerian_graph(std::mt19937& rng, int n, int cycles) {
  SignedGraph g(n);
  if (n < 2) return g;
  // A Hamiltonian-ish base cycle keeps the graph connected.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 0; i < n; ++i) {
    if (n == 2 && i == 1) {
      g.add_edge(perm[1], perm[0], random_sign(rng));
      break;
    }
    g.add_edge(perm[i], perm[(i + 1) % n], random_sign(rng));
  }
  std::uniform_int_distribution<int> length_dist(2, std::max(2, n));
  for (int c = 0; c < cycles; ++c) {
    int len = std::min(length_dist(rng), n);
    std::shuffle(perm.begin(), perm.end(), rng);
    if (len == 2) {
      g.add_edge(perm[0], perm[1], random_sign(rng));
      g.add_edge(perm[1], perm[0], random_sign(rng));
      continue;
    }
    for (int i = 0; i < len; ++i) g.add_edge(perm[i], perm[(i + 1) % len], random_sign(rng));
  }
  return g;
}

Orientation random_orientation(std::mt19937& rng, const SignedGraph& g) {
  std::vector<Arc> arcs;
  for (const Edge& e : g.edges()) {
    if (std::bernoulli_distribution(0.5)(rng)) {
      arcs.push_back({e.u, e.w});
    } else {
      arcs.push_back({e.w, e.u});
    }
  }
  return Orientation(g, arcs);
}

std::vector<int> random_even_subgraph(std::mt19937& rng, const SignedGraph& g) {
  SpanningForest forest = spanning_forest(g);
  std::vector<int> parity(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (forest.in_tree[e] || !std::bernoulli_distribution(0.5)(rng)) continue;
    parity[e] ^= 1;
    for (int t : tree_path(forest, g.edge(e).u, g.edge(e).w)) parity[t] ^= 1;
  }
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (parity[e]) out.push_back(e);
  }
  return out;
}

std::vector<bool> random_vertex_set(std::mt19937& rng, int n) {
  std::vector<bool> out(n);
  for (int v = 0; v < n; ++v) out[v] = std::bernoulli_distribution(0.5)(rng);
  return out;
}

SignedGraph random_relabel(std::mt19937& rng, const SignedGraph& g) {
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  SignedGraph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.w], e.sign);
  return out;
}

}  // namespace monoflow::testing
