#include "monoflow/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "monoflow/errors.hpp"

namespace monoflow {

namespace {

using Code = std::vector<int>;

Code encode(const SignedGraph& g, const std::vector<int>& label) {
  Code code;
  code.reserve(3 * static_cast<std::size_t>(g.edge_count()));
  std::vector<std::tuple<int, int, int>> edges;
  for (const Edge& e : g.edges()) {
    int a = label[e.u];
    int b = label[e.w];
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b, e.sign == Sign::Positive ? 0 : 1);
  }
  std::sort(edges.begin(), edges.end());
  for (auto [a, b, s] : edges) {
    code.push_back(a);
    code.push_back(b);
    code.push_back(s);
  }
  return code;
}

// Colour refinement: a vertex's new colour is its old colour plus the
// multiset of (neighbour colour, edge sign) pairs; colours are renumbered in
// key order, so the result is isomorphism invariant.
std::vector<int> refine(const SignedGraph& g, std::vector<int> colour) {
  const int n = g.vertex_count();
  int classes = -1;
  while (true) {
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> key(n);
    for (int v = 0; v < n; ++v) {
      key[v].first = colour[v];
      for (int e : g.incident(v)) {
        const Edge& edge = g.edge(e);
        key[v].second.push_back({colour[edge.other(v)], edge.sign == Sign::Positive ? 0 : 1});
      }
      std::sort(key[v].second.begin(), key[v].second.end());
    }
    std::vector<int> idx(n);
    for (int v = 0; v < n; ++v) idx[v] = v;
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return key[x] < key[y]; });
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && key[idx[i]] != key[idx[i - 1]]) ++c;
      colour[idx[i]] = c;
    }
    const int now = n == 0 ? 0 : c + 1;
    if (now == classes) return colour;
    classes = now;
  }
}

// Individualization-refinement: split the first non-singleton cell on each
// of its vertices in turn and keep the least code over all discrete leaves.
std::vector<int> canonical_labelling(const SignedGraph& g) {
  const int n = g.vertex_count();
  if (n > 10) throw BudgetExceeded("canonical form is limited to 10 vertices");
  if (n == 0) return {};
  std::vector<int> best_label;
  Code best;
  std::function<void(const std::vector<int>&)> go = [&](const std::vector<int>& colour) {
    std::vector<int> size(n, 0);
    for (int c : colour) ++size[c];
    int cell = -1;
    for (int c = 0; c < n; ++c) {
      if (size[c] > 1) {
        cell = c;
        break;
      }
    }
    if (cell < 0) {
      Code code = encode(g, colour);
      if (best_label.empty() || code < best) {
        best = std::move(code);
        best_label = colour;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (colour[v] != cell) continue;
      std::vector<int> split(n);
      for (int x = 0; x < n; ++x) split[x] = 2 * colour[x] + (colour[x] == cell && x != v ? 1 : 0);
      go(refine(g, split));
    }
  };
  go(refine(g, std::vector<int>(n, 0)));
  return best_label;
}

// An inversing class is fixed by its odd-negative-degree vertex set T, so
// the class up to isomorphism is the underlying graph with T marked by
// negative pendant edges.
std::string inversing_class_key(const SignedGraph& g) {
  SignedGraph marked = g.with_all_signs(Sign::Positive);
  const std::vector<int> t = negative_cut_vertices(g);
  SignedGraph out(g.vertex_count() + static_cast<int>(t.size()), std::vector<Edge>(marked.edges().begin(), marked.edges().end()));
  for (std::size_t i = 0; i < t.size(); ++i) out.add_edge(t[i], g.vertex_count() + static_cast<int>(i), Sign::Negative);
  return canonical_form(out);
}

}  // namespace

std::string canonical_form(const SignedGraph& g) {
  const std::vector<int> label = canonical_labelling(g);
  std::string out = std::to_string(g.vertex_count()) + ":";
  Code c = encode(g, label);
  for (std::size_t i = 0; i < c.size(); i += 3) {
    if (i > 0) out += ',';
    out += std::to_string(c[i]) + "-" + std::to_string(c[i + 1]) + (c[i + 2] == 0 ? "+" : "-");
  }
  return out;
}

bool are_isomorphic(const SignedGraph& a, const SignedGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

SignedGraph canonical_graph(const SignedGraph& g) {
  const std::vector<int> label = canonical_labelling(g);
  Code c = encode(g, label);
  SignedGraph out(g.vertex_count());
  for (std::size_t i = 0; i < c.size(); i += 3) {
    out.add_edge(c[i], c[i + 1], c[i + 2] == 0 ? Sign::Positive : Sign::Negative);
  }
  return out;
}

double enumeration_estimate(const EnumerationBounds& bounds) {
  // Multisets of size m over n(n-1)/2 pairs, summed over the range.
  double total = 0;
  for (int n = std::max(1, bounds.min_vertices); n <= bounds.max_vertices; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (int m = n - 1; m <= bounds.max_edges; ++m) {
      if (pairs == 0) {
        total += m == 0 ? 1 : 0;
        continue;
      }
      total += std::exp(std::lgamma(pairs + m) - std::lgamma(m + 1) - std::lgamma(pairs));
    }
  }
  return total;
}

std::vector<SignedGraph> connected_multigraphs(const EnumerationBounds& bounds) {
  std::vector<SignedGraph> out;
  for (int n = std::max(1, bounds.min_vertices); n <= bounds.max_vertices; ++n) {
    // Pairs in row order; a row is complete once its last pair is set, and
    // then the vertex degree is final. Degrees are kept non-increasing,
    // which every isomorphism class admits.
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
    }
    const int min_degree = std::max(bounds.min_degree, n > 1 ? 1 : 0);
    for (int m = n - 1; m <= bounds.max_edges; ++m) {
      if (bounds.even_degrees && n == 1 && m > 0) continue;
      std::map<std::string, SignedGraph> found;
      std::vector<int> mult(pairs.size(), 0);
      std::vector<int> deg(n, 0);
      auto row_ok = [&](int v) {
        if (deg[v] < min_degree) return false;
        if (bounds.even_degrees && deg[v] % 2 != 0) return false;
        return v == 0 || deg[v] <= deg[v - 1];
      };
      std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
        if (i == pairs.size()) {
          if (left != 0) return;
          if (n >= 1 && !row_ok(n - 1)) return;
          SignedGraph g(n);
          for (std::size_t j = 0; j < pairs.size(); ++j) {
            for (int c = 0; c < mult[j]; ++c) g.add_edge(pairs[j].first, pairs[j].second, Sign::Positive);
          }
          if (!is_connected(g)) return;
          std::string key = canonical_form(g);
          if (!found.count(key)) found.emplace(key, canonical_graph(g));
          return;
        }
        auto [a, b] = pairs[i];
        const bool row_end = b == n - 1;
        // Later rows must stay within the degree of the last finished row.
        const int cap = a > 0 ? deg[a - 1] : 2 * m;
        for (int c = left; c >= 0; --c) {
          mult[i] = c;
          deg[a] += c;
          deg[b] += c;
          bool ok = deg[a] <= cap && deg[b] <= cap;
          if (ok && row_end) {
            ok = row_ok(a);
            int deficit = 0;
            for (int v = a + 1; ok && v < n; ++v) {
              if (deg[v] > deg[a]) ok = false;
              deficit += std::max(0, min_degree - deg[v]);
            }
            if (deficit > 2 * (left - c)) ok = false;
          }
          if (ok) go(i + 1, left - c);
          deg[a] -= c;
          deg[b] -= c;
        }
        mult[i] = 0;
      };
      go(0, m);
      for (auto& [key, g] : found) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<SignedGraph> connected_signed_multigraphs(const EnumerationBounds& bounds, SignatureScope scope) {
  std::vector<SignedGraph> out;
  for (const SignedGraph& base : connected_multigraphs(bounds)) {
    const int m = base.edge_count();
    std::map<std::string, SignedGraph> found;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<Sign> signs(m);
      for (int e = 0; e < m; ++e) signs[e] = (mask >> e) & 1u ? Sign::Negative : Sign::Positive;
      SignedGraph g = base.with_signs(signs);
      std::string key = scope == SignatureScope::All ? canonical_form(g) : inversing_class_key(g);
      if (!found.count(key)) found.emplace(std::move(key), std::move(g));
    }
    for (auto& [key, g] : found) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace monoflow
