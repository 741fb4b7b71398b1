#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <tuple>

namespace monoflow::testing {

std::vector<std::vector<bool>> all_proper_subsets(int n) {
  std::vector<std::vector<bool>> out;
  if (n < 2) return out;
  for (unsigned mask = 1; mask + 1 < (1U << n); ++mask) {
    std::vector<bool> side(n);
    for (int v = 0; v < n; ++v) side[v] = (mask >> v) & 1U;
    out.push_back(side);
  }
  return out;
}

bool hoffman_by_enumeration(const SignedGraph& g, const Orientation& d, const NegativePartition& pi,
                            const Rational& r) {
  std::vector<EdgeBounds> bounds = hoffman_bounds(g, pi, r);
  for (const auto& side : all_proper_subsets(g.vertex_count())) {
    Rational entering(0);
    Rational leaving(0);
    for (int e = 0; e < g.edge_count(); ++e) {
      bool tail_in = side[d.arc(e).tail];
      bool head_in = side[d.arc(e).head];
      if (!tail_in && head_in) entering += bounds[e].lower;
      if (tail_in && !head_in) leaving += bounds[e].upper;
    }
    if (entering > leaving) return false;
  }
  return true;
}

bool brute_force_has_pq_flow(const SignedGraph& g, int p, int q) {
  const int m = g.edge_count();
  std::vector<std::vector<int>> choices(m);
  for (int e = 0; e < m; ++e) {
    for (int x = -(p - 1); x <= p - 1; ++x) {
      int a = std::abs(x);
      bool ok = g.is_positive(e) ? (a >= q && a <= p - q) : (a <= p / 2 - q || a >= p / 2 + q);
      if (ok) choices[e].push_back(x);
    }
  }
  // A vertex is checked once its highest-numbered edge is set.
  std::vector<int> last(g.vertex_count(), -1);
  for (int e = 0; e < m; ++e) {
    last[g.edge(e).u] = e;
    last[g.edge(e).w] = e;
  }
  std::vector<int> balance(g.vertex_count(), 0);
  std::function<bool(int)> go = [&](int e) -> bool {
    if (e == m) return true;
    int u = g.edge(e).u;
    int w = g.edge(e).w;
    for (int x : choices[e]) {
      balance[u] += x;
      balance[w] -= x;
      bool ok = (last[u] != e || balance[u] == 0) && (last[w] != e || balance[w] == 0);
      if (ok && go(e + 1)) return true;
      balance[u] -= x;
      balance[w] += x;
    }
    return false;
  };
  return go(0);
}

std::optional<Rational> brute_force_flow_index(const SignedGraph& g) {
  const int m = g.edge_count();
  if (m == 0) return Rational(2);
  std::optional<Rational> best;
  for (int a = 2; a <= 2 * m; ++a) {
    for (int b = 1; 2 * b <= a; ++b) {
      Rational r(a, b);
      if (best && r >= *best) continue;
      int p = 2 * a;
      int q = 2 * b;
      if (brute_force_has_pq_flow(g, p, q)) best = r;
    }
  }
  return best;
}

bool brute_force_has_tension(const SignedGraph& g, int p, int q) {
  const int n = g.vertex_count();
  std::vector<int> phi(n, 0);
  while (true) {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      int t = ((phi[e.w] - phi[e.u]) % p + p) % p;
      bool fine = e.sign == Sign::Positive ? (t >= q && t <= p - q) : (t <= p / 2 - q || t >= p / 2 + q);
      if (!fine) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    int v = 0;
    while (v < n && ++phi[v] == p) phi[v++] = 0;
    if (v == n) return false;
  }
}

std::optional<Rational> brute_force_chromatic(const SignedGraph& g, int max_p) {
  std::optional<Rational> best;
  for (int a = 2; a <= max_p; ++a) {
    for (int b = 1; 2 * b <= a; ++b) {
      Rational r(a, b);
      if (best && r >= *best) continue;
      if (brute_force_has_tension(g, 2 * a, 2 * b)) best = r;
    }
  }
  return best;
}

bool brute_force_mod_orientable(const SignedGraph& g, int ell) {
  const int m = g.edge_count();
  std::vector<int> target = negative_cut_vertices(g);
  for (unsigned sig = 0; sig < (1U << m); ++sig) {
    std::vector<Sign> signs(m);
    for (int e = 0; e < m; ++e) signs[e] = (sig >> e) & 1U ? Sign::Negative : Sign::Positive;
    SignedGraph h = g.with_signs(signs);
    if (negative_cut_vertices(h) != target) continue;
    for (unsigned dir = 0; dir < (1U << m); ++dir) {
      std::vector<int> pos(g.vertex_count(), 0);
      std::vector<int> neg(g.vertex_count(), 0);
      for (int e = 0; e < m; ++e) {
        int tail = (dir >> e) & 1U ? g.edge(e).w : g.edge(e).u;
        int head = g.edge(e).other(tail);
        auto& bucket = signs[e] == Sign::Positive ? pos : neg;
        bucket[tail] += 1;
        bucket[head] -= 1;
      }
      bool ok = true;
      for (int v = 0; v < g.vertex_count() && ok; ++v) ok = (ell - 1) * pos[v] == neg[v];
      if (ok) return true;
    }
  }
  return false;
}

bool brute_force_isomorphic(const SignedGraph& a, const SignedGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto edge_list = [](const SignedGraph& g, const std::vector<int>& perm) {
    std::vector<std::tuple<int, int, int>> out;
    for (const Edge& e : g.edges()) {
      int x = perm[e.u];
      int y = perm[e.w];
      out.emplace_back(std::min(x, y), std::max(x, y), static_cast<int>(e.sign));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<int> id(a.vertex_count());
  std::iota(id.begin(), id.end(), 0);
  const auto target = edge_list(b, id);
  std::vector<int> perm = id;
  do {
    if (edge_list(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::optional<int> brute_force_negative_girth(const SignedGraph& g) {
  const int m = g.edge_count();
  std::optional<int> best;
  for (unsigned mask = 1; mask < (1U << m); ++mask) {
    std::vector<int> edges;
    for (int e = 0; e < m; ++e) {
      if ((mask >> e) & 1U) edges.push_back(e);
    }
    std::vector<int> deg(g.vertex_count(), 0);
    Sign s = Sign::Positive;
    for (int e : edges) {
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).w];
      s = s * g.sign(e);
    }
    if (s != Sign::Negative) continue;
    bool two = true;
    int start = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (deg[v] != 0 && deg[v] != 2) two = false;
      if (deg[v] == 2 && start < 0) start = v;
    }
    if (!two) continue;
    // Connected: walk from start.
    std::vector<bool> reached(g.vertex_count(), false);
    std::function<void(int)> visit = [&](int v) {
      reached[v] = true;
      for (int e : edges) {
        const Edge& edge = g.edge(e);
        if (edge.u == v && !reached[edge.w]) visit(edge.w);
        if (edge.w == v && !reached[edge.u]) visit(edge.u);
      }
    };
    visit(start);
    bool connected = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (deg[v] == 2 && !reached[v]) connected = false;
    }
    if (!connected) continue;
    int len = static_cast<int>(edges.size());
    if (!best || len < *best) best = len;
  }
  return best;
}

bool brute_force_hom_to_negative_cycle(const SignedGraph& g, int k, bool negated_target) {
  const int n = g.vertex_count();
  long long images = 1;
  for (int v = 0; v < n; ++v) images *= k;
  for (long long code = 0; code < images; ++code) {
    std::vector<int> img(n);
    long long c = code;
    for (int v = 0; v < n; ++v) {
      img[v] = static_cast<int>(c % k);
      c /= k;
    }
    for (unsigned sw = 0; sw < (1U << n); ++sw) {
      bool ok = true;
      for (const Edge& e : g.edges()) {
        Sign s = e.sign;
        if (((sw >> e.u) & 1U) != ((sw >> e.w) & 1U)) s = -s;
        // Target edges i = (i, i+1); edge k-1 negative.
        bool found = false;
        for (int i = 0; i < k && !found; ++i) {
          int a = i;
          int b = (i + 1) % k;
          Sign ts = i == k - 1 ? Sign::Negative : Sign::Positive;
          if (negated_target) ts = -ts;
          bool ends = (img[e.u] == a && img[e.w] == b) || (img[e.u] == b && img[e.w] == a);
          found = ends && ts == s;
        }
        if (!found) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace monoflow::testing
