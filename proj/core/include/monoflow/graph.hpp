#pragma once

// Signed multigraphs, orientations, cuts, and the sign-equivalence
// machinery (switching on vertex sets, inversing on even-degree subgraphs).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monoflow {

enum class Sign : std::int8_t { Positive = 1, Negative = -1 };

constexpr Sign operator-(Sign s) {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}
constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::Positive : Sign::Negative;
}
constexpr char sign_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

struct Edge {
  int u = 0;
  int w = 0;
  Sign sign = Sign::Positive;

  int other(int v) const { return v == u ? w : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A loopless multigraph with a signature. Edge ids are dense, in insertion
/// order, and parallel edges are distinguished by id.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int vertex_count);
  SignedGraph(int vertex_count, std::vector<Edge> edges);

  /// Appends an edge and returns its id. Throws PreconditionError on loops
  /// or out-of-range endpoints.
  int add_edge(int u, int w, Sign sign);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }
  std::span<const Edge> edges() const { return edges_; }
  const std::vector<int>& incident(int v) const { return incidence_.at(static_cast<std::size_t>(v)); }

  Sign sign(int e) const { return edge(e).sign; }
  bool is_positive(int e) const { return edge(e).sign == Sign::Positive; }
  int degree(int v) const { return static_cast<int>(incident(v).size()); }
  int positive_degree(int v) const;
  int negative_degree(int v) const;
  int negative_edge_count() const;

  std::vector<Sign> signs() const;
  /// Same underlying multigraph with a new signature.
  SignedGraph with_signs(std::span<const Sign> signs) const;
  /// Same underlying multigraph with every edge given `s`.
  SignedGraph with_all_signs(Sign s) const;
  /// Same vertices, same edge ids and endpoints (signs ignored).
  bool same_underlying(const SignedGraph& other) const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

struct Arc {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// One (tail, head) per edge of a host graph.
class Orientation {
 public:
  Orientation() = default;
  /// Validates that every arc matches its host edge's endpoints.
  Orientation(const SignedGraph& g, std::vector<Arc> arcs);

  /// Every edge oriented from its first to its second listed endpoint.
  static Orientation reference(const SignedGraph& g);

  int edge_count() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int e) const { return arcs_.at(static_cast<std::size_t>(e)); }
  std::span<const Arc> arcs() const { return arcs_; }

  void flip(int e);
  Orientation flipped(int e) const;
  /// True when edge e runs from its first listed endpoint to its second.
  bool agrees_with_reference(const SignedGraph& g, int e) const;

  /// Out-degree minus in-degree at v, optionally restricted to one sign.
  int imbalance(const SignedGraph& g, int v) const;
  int imbalance(const SignedGraph& g, int v, Sign only) const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<Arc> arcs_;
};

/// The edge cut (X, X^c).
struct Cut {
  std::vector<bool> side;  // side[v] == true iff v in X
  std::vector<int> edge_ids;

  std::vector<int> vertices() const;
};

/// Builds the cut of X. Throws PreconditionError if X is empty or all of V.
Cut make_cut(const SignedGraph& g, std::vector<bool> side);
/// Product of the signs of the edges in the set (multiplicity counts).
Sign set_sign(const SignedGraph& g, std::span<const int> edge_ids);

// ---- structure ---------------------------------------------------------

/// Component index per vertex; the count is max + 1.
std::vector<int> component_labels(const SignedGraph& g);
int component_count(const SignedGraph& g);
bool is_connected(const SignedGraph& g);

/// BFS spanning forest. parent_edge[v] == -1 at roots.
struct SpanningForest {
  std::vector<int> parent_edge;
  std::vector<int> parent;
  std::vector<int> depth;
  std::vector<int> order;  // BFS visiting order
  std::vector<bool> in_tree;  // per edge
};
SpanningForest spanning_forest(const SignedGraph& g);
/// Edge ids on the tree path between a and b (same component).
std::vector<int> tree_path(const SpanningForest& forest, int a, int b);

std::vector<int> bridges(const SignedGraph& g);
bool has_positive_bridge(const SignedGraph& g);
bool all_degrees_even(const SignedGraph& g);
bool is_bipartite(const SignedGraph& g);

// ---- switching and inversing -------------------------------------------

/// Flips the sign of every edge with exactly one endpoint in S.
SignedGraph switch_at(const SignedGraph& g, const std::vector<bool>& in_set);
SignedGraph switch_at(const SignedGraph& g, std::span<const int> vertices);

/// Flips the signs on F. Throws PreconditionError naming an odd-degree
/// vertex if F is not an even-degree edge set.
SignedGraph invert_on(const SignedGraph& g, std::span<const int> edge_ids);

/// Same set of negative cuts; checked on singleton cuts.
bool is_inversing_equivalent(const SignedGraph& a, const SignedGraph& b);
/// Same set of negative cycles; checked on fundamental cycles.
bool is_switching_equivalent(const SignedGraph& a, const SignedGraph& b);

/// An inversing-equivalent signature whose negative edges all lie in the
/// tree, obtained by inversing on the fundamental cycle of every negative
/// co-tree edge.
SignedGraph normalize_to_tree(const SignedGraph& g, std::span<const int> tree_edges);

/// Vertices whose singleton cut is negative (the T of the T-join view).
std::vector<int> negative_cut_vertices(const SignedGraph& g);

/// 2^(n - c).
std::uint64_t count_inversing_classes(const SignedGraph& g);

// ---- cut types -----------------------------------------------------------

/// A cut size, or std::nullopt for "no such cut" (unbounded).
using CutSize = std::optional<int>;

struct CutTypeProfile {
  CutSize c00;  // positive, even
  CutSize c01;  // positive, odd
  CutSize c10;  // negative, even
  CutSize c11;  // negative, odd
};

/// Smallest cut of each type, by enumerating every bipartition. A missing
/// 00-type is reported as 0, the others as unbounded.
CutTypeProfile cut_type_minima(const SignedGraph& g, int enumeration_limit = 16);

// ---- constructions -----------------------------------------------------

/// Replaces every edge uv (id i) by u-m_i (id 2i, negative) and m_i-v
/// (id 2i+1, positive) with a fresh midpoint m_i = n + i. Input must be
/// all-positive.
SignedGraph t2_construction(const SignedGraph& g);

struct MultipliedGraph {
  SignedGraph graph;
  /// provenance[new_id] = (original edge id, copy index); new id = i*k + j.
  std::vector<std::pair<int, int>> provenance;
};
MultipliedGraph multiply_edges(const SignedGraph& g, int k);

/// Minimum cut size of the underlying multigraph; 0 when disconnected or
/// when there are fewer than two vertices.
int edge_connectivity(const SignedGraph& g);

/// Nash-Williams/Tutte partition condition, exhaustive over set partitions.
/// Guarded to at most 10 vertices.
bool has_edge_disjoint_spanning_trees(const SignedGraph& g, int count);

// ---- graph file format -------------------------------------------------

/// "v <n>" then "e <u> <w> <+|->" lines; '#' starts a comment line.
/// Accepts the Unicode minus sign as well as '-'.
SignedGraph parse_signed_graph(std::string_view text);
std::string format_signed_graph(const SignedGraph& g);

// ---- a few named graphs used by tests, suites and benchmarks -----------

namespace named {
SignedGraph negative_digon();                      // C_{-2}: one +, one -
SignedGraph cycle(int length, int negative_edges);  // first edges negative
SignedGraph complete(int n, Sign s = Sign::Positive);
SignedGraph petersen();
SignedGraph parallel_edges(int count, int negative_edges);  // kK_2
}  // namespace named

}  // namespace monoflow
