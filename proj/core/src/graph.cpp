#include "monoflow/graph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <queue>
#include <sstream>

#include "maxflow.hpp"
#include "monoflow/errors.hpp"

namespace monoflow {

// ---- SignedGraph ---------------------------------------------------------

SignedGraph::SignedGraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  incidence_.resize(vertex_count);
}

SignedGraph::SignedGraph(int vertex_count, std::vector<Edge> edges) : SignedGraph(vertex_count) {
  for (const Edge& e : edges) add_edge(e.u, e.w, e.sign);
}

int SignedGraph::add_edge(int u, int w, Sign sign) {
  if (u < 0 || w < 0 || u >= vertex_count_ || w >= vertex_count_) {
    throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(w));
  }
  if (u == w) throw PreconditionError("loop at vertex " + std::to_string(u));
  int id = edge_count();
  edges_.push_back({u, w, sign});
  incidence_[u].push_back(id);
  incidence_[w].push_back(id);
  return id;
}

int SignedGraph::positive_degree(int v) const {
  int d = 0;
  for (int e : incident(v)) d += is_positive(e) ? 1 : 0;
  return d;
}

int SignedGraph::negative_degree(int v) const { return degree(v) - positive_degree(v); }

int SignedGraph::negative_edge_count() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [](const Edge& e) { return e.sign == Sign::Negative; }));
}

std::vector<Sign> SignedGraph::signs() const {
  std::vector<Sign> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.sign);
  return out;
}

SignedGraph SignedGraph::with_signs(std::span<const Sign> signs) const {
  if (static_cast<int>(signs.size()) != edge_count()) throw PreconditionError("signature length mismatch");
  SignedGraph out = *this;
  for (std::size_t i = 0; i < signs.size(); ++i) out.edges_[i].sign = signs[i];
  return out;
}

SignedGraph SignedGraph::with_all_signs(Sign s) const {
  SignedGraph out = *this;
  for (Edge& e : out.edges_) e.sign = s;
  return out;
}

bool SignedGraph::same_underlying(const SignedGraph& other) const {
  if (vertex_count_ != other.vertex_count_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u != other.edges_[i].u || edges_[i].w != other.edges_[i].w) return false;
  }
  return true;
}

// ---- Orientation ---------------------------------------------------------

Orientation::Orientation(const SignedGraph& g, std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  if (static_cast<int>(arcs_.size()) != g.edge_count()) {
    throw PreconditionError("orientation covers " + std::to_string(arcs_.size()) + " of " +
                            std::to_string(g.edge_count()) + " edges");
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const Arc& a = arcs_[e];
    bool ok = (a.tail == edge.u && a.head == edge.w) || (a.tail == edge.w && a.head == edge.u);
    if (!ok) throw PreconditionError("arc for edge " + std::to_string(e) + " does not match its endpoints");
  }
}

Orientation Orientation::reference(const SignedGraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) arcs.push_back({e.u, e.w});
  return Orientation(g, std::move(arcs));
}

void Orientation::flip(int e) {
  Arc& a = arcs_.at(e);
  std::swap(a.tail, a.head);
}

Orientation Orientation::flipped(int e) const {
  Orientation out = *this;
  out.flip(e);
  return out;
}

bool Orientation::agrees_with_reference(const SignedGraph& g, int e) const {
  return arc(e).tail == g.edge(e).u;
}

int Orientation::imbalance(const SignedGraph& g, int v) const {
  int total = 0;
  for (int e : g.incident(v)) total += arc(e).tail == v ? 1 : -1;
  return total;
}

int Orientation::imbalance(const SignedGraph& g, int v, Sign only) const {
  int total = 0;
  for (int e : g.incident(v)) {
    if (g.sign(e) == only) total += arc(e).tail == v ? 1 : -1;
  }
  return total;
}

// ---- cuts -----------------------------------------------------------------

std::vector<int> Cut::vertices() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < side.size(); ++v) {
    if (side[v]) out.push_back(static_cast<int>(v));
  }
  return out;
}

Cut make_cut(const SignedGraph& g, std::vector<bool> side) {
  if (static_cast<int>(side.size()) != g.vertex_count()) throw PreconditionError("cut side has wrong length");
  auto inside = std::count(side.begin(), side.end(), true);
  if (inside == 0 || inside == g.vertex_count()) throw PreconditionError("cut side must be proper and nonempty");
  Cut cut{std::move(side), {}};
  for (int e = 0; e < g.edge_count(); ++e) {
    if (cut.side[g.edge(e).u] != cut.side[g.edge(e).w]) cut.edge_ids.push_back(e);
  }
  return cut;
}

Sign set_sign(const SignedGraph& g, std::span<const int> edge_ids) {
  Sign s = Sign::Positive;
  for (int e : edge_ids) s = s * g.sign(e);
  return s;
}

// ---- structure ------------------------------------------------------------

std::vector<int> component_labels(const SignedGraph& g) {
  std::vector<int> label(g.vertex_count(), -1);
  int next = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.incident(v)) {
        int x = g.edge(e).other(v);
        if (label[x] < 0) {
          label[x] = next;
          stack.push_back(x);
        }
      }
    }
    ++next;
  }
  return label;
}

int component_count(const SignedGraph& g) {
  auto label = component_labels(g);
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

bool is_connected(const SignedGraph& g) { return component_count(g) <= 1; }

SpanningForest spanning_forest(const SignedGraph& g) {
  int n = g.vertex_count();
  SpanningForest f;
  f.parent_edge.assign(n, -1);
  f.parent.assign(n, -1);
  f.depth.assign(n, -1);
  f.in_tree.assign(g.edge_count(), false);
  for (int root = 0; root < n; ++root) {
    if (f.depth[root] >= 0) continue;
    std::queue<int> queue;
    queue.push(root);
    f.depth[root] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      f.order.push_back(v);
      for (int e : g.incident(v)) {
        int x = g.edge(e).other(v);
        if (f.depth[x] >= 0) continue;
        f.depth[x] = f.depth[v] + 1;
        f.parent[x] = v;
        f.parent_edge[x] = e;
        f.in_tree[e] = true;
        queue.push(x);
      }
    }
  }
  return f;
}

std::vector<int> tree_path(const SpanningForest& forest, int a, int b) {
  std::vector<int> from_a;
  std::vector<int> from_b;
  while (a != b) {
    if (forest.depth[a] >= forest.depth[b]) {
      if (forest.parent[a] < 0) throw PreconditionError("tree_path endpoints in different components");
      from_a.push_back(forest.parent_edge[a]);
      a = forest.parent[a];
    } else {
      from_b.push_back(forest.parent_edge[b]);
      b = forest.parent[b];
    }
  }
  from_a.insert(from_a.end(), from_b.rbegin(), from_b.rend());
  return from_a;
}

std::vector<int> bridges(const SignedGraph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<int> out;
  int timer = 0;
  std::function<void(int, int)> visit = [&](int v, int via_edge) {
    disc[v] = low[v] = timer++;
    for (int e : g.incident(v)) {
      if (e == via_edge) continue;
      int x = g.edge(e).other(v);
      if (disc[x] < 0) {
        visit(x, e);
        low[v] = std::min(low[v], low[x]);
        if (low[x] > disc[v]) out.push_back(e);
      } else {
        low[v] = std::min(low[v], disc[x]);
      }
    }
  };
  for (int v = 0; v < n; ++v) {
    if (disc[v] < 0) visit(v, -1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_positive_bridge(const SignedGraph& g) {
  for (int e : bridges(g)) {
    if (g.is_positive(e)) return true;
  }
  return false;
}

bool all_degrees_even(const SignedGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 != 0) return false;
  }
  return true;
}

bool is_bipartite(const SignedGraph& g) {
  std::vector<int> colour(g.vertex_count(), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.incident(v)) {
        int x = g.edge(e).other(v);
        if (colour[x] < 0) {
          colour[x] = 1 - colour[v];
          stack.push_back(x);
        } else if (colour[x] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// ---- switching and inversing ------------------------------------------------

SignedGraph switch_at(const SignedGraph& g, const std::vector<bool>& in_set) {
  if (static_cast<int>(in_set.size()) != g.vertex_count()) throw PreconditionError("switching set has wrong length");
  std::vector<Sign> signs = g.signs();
  for (int e = 0; e < g.edge_count(); ++e) {
    if (in_set[g.edge(e).u] != in_set[g.edge(e).w]) signs[e] = -signs[e];
  }
  return g.with_signs(signs);
}

SignedGraph switch_at(const SignedGraph& g, std::span<const int> vertices) {
  std::vector<bool> in_set(g.vertex_count(), false);
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("switching vertex out of range");
    in_set[v] = true;
  }
  return switch_at(g, in_set);
}

SignedGraph invert_on(const SignedGraph& g, std::span<const int> edge_ids) {
  std::vector<int> parity(g.vertex_count(), 0);
  std::vector<bool> chosen(g.edge_count(), false);
  for (int e : edge_ids) {
    if (e < 0 || e >= g.edge_count()) throw PreconditionError("edge id out of range: " + std::to_string(e));
    if (chosen[e]) throw PreconditionError("edge listed twice: " + std::to_string(e));
    chosen[e] = true;
    parity[g.edge(e).u] ^= 1;
    parity[g.edge(e).w] ^= 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (parity[v] != 0) throw PreconditionError("edge set has odd degree at vertex " + std::to_string(v));
  }
  std::vector<Sign> signs = g.signs();
  for (int e : edge_ids) signs[e] = -signs[e];
  return g.with_signs(signs);
}

namespace {

void require_same_underlying(const SignedGraph& a, const SignedGraph& b) {
  if (!a.same_underlying(b)) throw PreconditionError("signed graphs do not share an underlying multigraph");
}

}  // namespace

std::vector<int> negative_cut_vertices(const SignedGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.negative_degree(v) % 2 != 0) out.push_back(v);
  }
  return out;
}

bool is_inversing_equivalent(const SignedGraph& a, const SignedGraph& b) {
  require_same_underlying(a, b);
  return negative_cut_vertices(a) == negative_cut_vertices(b);
}

bool is_switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  require_same_underlying(a, b);
  SpanningForest forest = spanning_forest(a);
  for (int e = 0; e < a.edge_count(); ++e) {
    if (forest.in_tree[e]) continue;
    std::vector<int> cycle = tree_path(forest, a.edge(e).u, a.edge(e).w);
    cycle.push_back(e);
    if (set_sign(a, cycle) != set_sign(b, cycle)) return false;
  }
  return true;
}

SignedGraph normalize_to_tree(const SignedGraph& g, std::span<const int> tree_edges) {
  int n = g.vertex_count();
  if (!is_connected(g)) throw PreconditionError("normalize_to_tree needs a connected graph");
  if (static_cast<int>(tree_edges.size()) != std::max(n - 1, 0)) {
    throw PreconditionError("tree must have n - 1 edges");
  }
  SignedGraph tree(n);
  std::vector<bool> in_tree(g.edge_count(), false);
  for (int e : tree_edges) {
    if (e < 0 || e >= g.edge_count() || in_tree[e]) throw PreconditionError("bad tree edge " + std::to_string(e));
    in_tree[e] = true;
    tree.add_edge(g.edge(e).u, g.edge(e).w, Sign::Positive);
  }
  if (!is_connected(tree)) throw PreconditionError("tree edges do not form a spanning tree");

  // Tree-path lookups on the given tree; tree-edge ids map back to g.
  SpanningForest forest = spanning_forest(tree);
  std::vector<int> back(tree_edges.begin(), tree_edges.end());
  SignedGraph current = g;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e] || g.is_positive(e)) continue;
    std::vector<int> cycle{e};
    for (int t : tree_path(forest, g.edge(e).u, g.edge(e).w)) cycle.push_back(back[t]);
    current = invert_on(current, cycle);
  }
  return current;
}

std::uint64_t count_inversing_classes(const SignedGraph& g) {
  int exponent = g.vertex_count() - component_count(g);
  if (exponent >= 64) throw PreconditionError("class count overflows 64 bits");
  return std::uint64_t{1} << exponent;
}

// ---- cut types --------------------------------------------------------------

CutTypeProfile cut_type_minima(const SignedGraph& g, int enumeration_limit) {
  int n = g.vertex_count();
  if (n > enumeration_limit) {
    throw BudgetExceeded("cut_type_minima: " + std::to_string(n) + " vertices exceeds limit " +
                         std::to_string(enumeration_limit));
  }
  std::array<CutSize, 4> best{};
  if (n >= 2) {
    // Vertex n-1 stays outside X so each cut is visited once.
    std::uint64_t subsets = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
      int size = 0;
      bool negative = false;
      for (const Edge& e : g.edges()) {
        bool iu = e.u < n - 1 && ((mask >> e.u) & 1U);
        bool iw = e.w < n - 1 && ((mask >> e.w) & 1U);
        if (iu != iw) {
          ++size;
          negative ^= e.sign == Sign::Negative;
        }
      }
      int type = (negative ? 2 : 0) + (size % 2);
      if (!best[type] || *best[type] > size) best[type] = size;
    }
  }
  CutTypeProfile profile;
  profile.c00 = best[0] ? best[0] : CutSize{0};
  profile.c01 = best[1];
  profile.c10 = best[2];
  profile.c11 = best[3];
  return profile;
}

// ---- constructions ----------------------------------------------------------

SignedGraph t2_construction(const SignedGraph& g) {
  if (g.negative_edge_count() != 0) throw PreconditionError("t2_construction needs an all-positive graph");
  int n = g.vertex_count();
  SignedGraph out(n + g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    int mid = n + i;
    out.add_edge(g.edge(i).u, mid, Sign::Negative);
    out.add_edge(mid, g.edge(i).w, Sign::Positive);
  }
  return out;
}

MultipliedGraph multiply_edges(const SignedGraph& g, int k) {
  if (k < 0) throw PreconditionError("multiplier must be nonnegative");
  MultipliedGraph out{SignedGraph(g.vertex_count()), {}};
  for (int i = 0; i < g.edge_count(); ++i) {
    for (int j = 0; j < k; ++j) {
      out.graph.add_edge(g.edge(i).u, g.edge(i).w, g.edge(i).sign);
      out.provenance.emplace_back(i, j);
    }
  }
  return out;
}

int edge_connectivity(const SignedGraph& g) {
  int n = g.vertex_count();
  if (n <= 1 || !is_connected(g)) return 0;
  int best = g.edge_count();
  for (int t = 1; t < n; ++t) {
    detail::MaxFlow net(n);
    for (const Edge& e : g.edges()) {
      net.add_arc(e.u, e.w, 1);
      net.add_arc(e.w, e.u, 1);
    }
    best = std::min(best, static_cast<int>(net.run(0, t)));
  }
  return best;
}

bool has_edge_disjoint_spanning_trees(const SignedGraph& g, int count) {
  int n = g.vertex_count();
  if (n > 10) throw BudgetExceeded("spanning-tree packing check is limited to 10 vertices");
  if (count <= 0 || n <= 1) return true;
  // Restricted growth strings enumerate every partition of V exactly once.
  std::vector<int> block(n, 0);
  std::vector<int> max_prefix(n, 0);
  while (true) {
    int parts = *std::max_element(block.begin(), block.end()) + 1;
    if (parts > 1) {
      int crossing = 0;
      for (const Edge& e : g.edges()) crossing += block[e.u] != block[e.w] ? 1 : 0;
      if (crossing < count * (parts - 1)) return false;
    }
    int i = n - 1;
    while (i > 0 && block[i] > max_prefix[i - 1]) --i;
    if (i == 0) break;
    ++block[i];
    int running = std::max(max_prefix[i - 1], block[i]);
    max_prefix[i] = running;
    for (int j = i + 1; j < n; ++j) {
      block[j] = 0;
      max_prefix[j] = running;
    }
  }
  return true;
}

// ---- file format ------------------------------------------------------------

SignedGraph parse_signed_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<SignedGraph> g;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "v") {
      if (g) throw ParseError(line_no, "duplicate vertex-count line");
      long long n = -1;
      std::string extra;
      if (!(fields >> n) || n < 0 || (fields >> extra)) throw ParseError(line_no, "expected 'v <n>'");
      g.emplace(static_cast<int>(n));
    } else if (tag == "e") {
      if (!g) throw ParseError(line_no, "edge before vertex-count line");
      long long u = -1;
      long long w = -1;
      std::string sign_text;
      std::string extra;
      if (!(fields >> u >> w >> sign_text) || (fields >> extra)) {
        throw ParseError(line_no, "expected 'e <u> <w> <+|->'");
      }
      Sign s;
      if (sign_text == "+") {
        s = Sign::Positive;
      } else if (sign_text == "-" || sign_text == "\xE2\x88\x92") {
        s = Sign::Negative;
      } else {
        throw ParseError(line_no, "bad sign '" + sign_text + "'");
      }
      if (u < 0 || w < 0 || u >= g->vertex_count() || w >= g->vertex_count()) {
        throw ParseError(line_no, "vertex out of range");
      }
      if (u == w) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
      g->add_edge(static_cast<int>(u), static_cast<int>(w), s);
    } else {
      throw ParseError(line_no, "unknown record '" + tag + "'");
    }
  }
  if (!g) throw ParseError(0, "missing 'v <n>' line");
  return *g;
}

std::string format_signed_graph(const SignedGraph& g) {
  std::ostringstream out;
  out << "v " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.w << ' ' << sign_char(e.sign) << '\n';
  return out.str();
}

// ---- named graphs -------------------------------------------------------------

namespace named {

SignedGraph negative_digon() { return parallel_edges(2, 1); }

SignedGraph cycle(int length, int negative_edges) {
  if (length < 2) throw PreconditionError("cycle length must be at least 2");
  SignedGraph g(length);
  for (int i = 0; i < length; ++i) {
    g.add_edge(i, (i + 1) % length, i < negative_edges ? Sign::Negative : Sign::Positive);
  }
  return g;
}

SignedGraph complete(int n, Sign s) {
  SignedGraph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b, s);
  }
  return g;
}

SignedGraph petersen() {
  SignedGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5, Sign::Positive);
    g.add_edge(i, i + 5, Sign::Positive);
    g.add_edge(5 + i, 5 + (i + 2) % 5, Sign::Positive);
  }
  return g;
}

SignedGraph parallel_edges(int count, int negative_edges) {
  SignedGraph g(2);
  for (int i = 0; i < count; ++i) {
    g.add_edge(0, 1, i >= count - negative_edges ? Sign::Negative : Sign::Positive);
  }
  return g;
}

}  // namespace named

}  // namespace monoflow
