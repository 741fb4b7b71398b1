#include "monoflow/orientation.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>

#include "components.hpp"
#include "monoflow/errors.hpp"

namespace monoflow {

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

void check_same_graph(const SignedGraph& g, const Orientation& d) {
  if (d.edge_count() != g.edge_count()) {
    throw PreconditionError("orientation has " + std::to_string(d.edge_count()) + " arcs, graph has " +
                            std::to_string(g.edge_count()) + " edges");
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const Arc& a = d.arc(e);
    bool ok = (a.tail == edge.u && a.head == edge.w) || (a.tail == edge.w && a.head == edge.u);
    if (!ok) throw PreconditionError("arc " + std::to_string(e) + " does not match its edge");
  }
}

// ---- component-wise edge DFS ----------------------------------------------------
//
// A Spec supplies options(e), apply(e, option, +1/-1) and vertex_ok(v, open),
// the latter called whenever an incident edge is assigned (open = number of
// still unassigned incident edges).

template <class Spec>
SearchStatus edge_dfs(const SignedGraph& g, Spec& spec, BudgetClock& clock, std::vector<int>& choice) {
  const int n = g.vertex_count();
  std::vector<int> open(n);
  for (int v = 0; v < n; ++v) {
    open[v] = g.degree(v);
    if (open[v] == 0 && !spec.vertex_ok(v, 0)) return SearchStatus::NotFound;
  }
  if (g.edge_count() == 0) return SearchStatus::Found;
  const std::vector<int> order = detail::make_edge_plan(g).order;
  choice.assign(g.edge_count(), -1);
  bool cut = false;

  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    const int e = order[i];
    const Edge& edge = g.edge(e);
    --open[edge.u];
    --open[edge.w];
    for (int o = 0; o < spec.options(e); ++o) {
      if (!clock.tick()) {
        cut = true;
        break;
      }
      spec.apply(e, o, 1);
      if (spec.vertex_ok(edge.u, open[edge.u]) && spec.vertex_ok(edge.w, open[edge.w])) {
        choice[e] = o;
        if (go(i + 1)) return true;
      }
      spec.apply(e, o, -1);
      if (cut) break;
    }
    ++open[edge.u];
    ++open[edge.w];
    return false;
  };
  if (go(0)) return SearchStatus::Found;
  return cut ? SearchStatus::Unknown : SearchStatus::NotFound;
}

// Runs make_spec(piece) on every component; choices are mapped back to host
// edge ids.
template <class MakeSpec>
SearchStatus dfs_by_components(const SignedGraph& g, MakeSpec make_spec, BudgetClock& clock,
                               std::vector<int>& choice) {
  choice.assign(g.edge_count(), -1);
  bool unknown = false;
  for (const detail::Piece& piece : detail::split_components(g)) {
    auto spec = make_spec(piece);
    std::vector<int> local;
    clock.reset_nodes();
    SearchStatus s = edge_dfs(piece.graph, spec, clock, local);
    if (s == SearchStatus::NotFound) return s;
    if (s == SearchStatus::Unknown) {
      unknown = true;
      if (clock.out_of_time()) break;
      continue;
    }
    for (std::size_t e = 0; e < local.size(); ++e) choice[piece.edge_map[e]] = local[e];
  }
  return unknown ? SearchStatus::Unknown : SearchStatus::Found;
}

// ---- lifting and regular bipartite colouring -------------------------------------

struct Chain {
  int tail;
  int head;
  Sign sign;
  std::vector<int> edges;
};

struct Lifted {
  std::vector<Chain> open;
  std::vector<Chain> closed;
};

// Joins an arc entering v with an arc leaving v (optionally of the same sign)
// until every vertex is a pure source or sink for each sign class.
Lifted lift_chains(const SignedGraph& signs, const Orientation& d, bool same_sign) {
  Lifted out;
  for (int e = 0; e < signs.edge_count(); ++e) {
    out.open.push_back({d.arc(e).tail, d.arc(e).head, same_sign ? signs.sign(e) : Sign::Positive, {e}});
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < out.open.size() && !changed; ++i) {
      for (std::size_t j = 0; j < out.open.size(); ++j) {
        if (i == j || out.open[i].head != out.open[j].tail || out.open[i].sign != out.open[j].sign) continue;
        Chain& a = out.open[i];
        a.head = out.open[j].head;
        a.edges.insert(a.edges.end(), out.open[j].edges.begin(), out.open[j].edges.end());
        out.open.erase(out.open.begin() + static_cast<std::ptrdiff_t>(j));
        std::size_t ai = j < i ? i - 1 : i;
        if (out.open[ai].tail == out.open[ai].head) {
          out.closed.push_back(std::move(out.open[ai]));
          out.open.erase(out.open.begin() + static_cast<std::ptrdiff_t>(ai));
        }
        changed = true;
        break;
      }
    }
  }
  return out;
}

// A closed chain is an even edge set with zero imbalance everywhere, so it
// may join any part; each goes to the currently smallest one.
void place_closed(const std::vector<Chain>& closed, std::vector<std::vector<int>>& parts) {
  for (const Chain& c : closed) {
    auto smallest = std::min_element(parts.begin(), parts.end(),
                                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    smallest->insert(smallest->end(), c.edges.begin(), c.edges.end());
  }
}

// Splits the chain endpoints at every vertex into groups of `degree`
// (copies), which gives a degree-regular bipartite multigraph between tail
// copies and head copies, and colours it with `degree` perfect matchings.
std::vector<int> color_regular(int n, const std::vector<Chain>& chains, int degree) {
  std::vector<int> left(chains.size()), right(chains.size());
  std::vector<int> tail_seen(n, 0), head_seen(n, 0);
  std::vector<int> left_base(n, 0), right_base(n, 0);
  for (const Chain& c : chains) {
    ++tail_seen[c.tail];
    ++head_seen[c.head];
  }
  int left_count = 0, right_count = 0;
  for (int v = 0; v < n; ++v) {
    if (tail_seen[v] % degree != 0 || head_seen[v] % degree != 0) {
      throw Error("lifted digraph is not regular at vertex " + std::to_string(v));
    }
    left_base[v] = left_count;
    right_base[v] = right_count;
    left_count += tail_seen[v] / degree;
    right_count += head_seen[v] / degree;
  }
  std::fill(tail_seen.begin(), tail_seen.end(), 0);
  std::fill(head_seen.begin(), head_seen.end(), 0);
  for (std::size_t i = 0; i < chains.size(); ++i) {
    left[i] = left_base[chains[i].tail] + tail_seen[chains[i].tail]++ / degree;
    right[i] = right_base[chains[i].head] + head_seen[chains[i].head]++ / degree;
  }

  std::vector<int> color(chains.size(), -1);
  for (int round = 0; round < degree; ++round) {
    std::vector<std::vector<int>> adj(left_count);
    for (std::size_t i = 0; i < chains.size(); ++i) {
      if (color[i] < 0) adj[left[i]].push_back(static_cast<int>(i));
    }
    std::vector<int> match_right(right_count, -1);  // edge index
    std::vector<bool> visited;
    std::function<bool(int)> augment = [&](int l) -> bool {
      for (int i : adj[l]) {
        int r = right[i];
        if (visited[r]) continue;
        visited[r] = true;
        if (match_right[r] < 0 || augment(left[match_right[r]])) {
          match_right[r] = i;
          return true;
        }
      }
      return false;
    };
    for (int l = 0; l < left_count; ++l) {
      visited.assign(right_count, false);
      if (!augment(l)) throw Error("regular bipartite graph without a perfect matching");
    }
    for (int i : match_right) {
      if (i >= 0) color[i] = round;
    }
  }
  return color;
}

}  // namespace

// ---- boundaries ------------------------------------------------------------------

BoundaryFunction::BoundaryFunction(int modulus, std::vector<int> residues)
    : modulus_(modulus), residues_(std::move(residues)) {
  if (modulus < 1) throw PreconditionError("boundary modulus must be positive");
  for (int& r : residues_) r = mod(r, modulus);
}

int BoundaryFunction::symmetric(int v) const {
  int r = residue(v);
  return 2 * r > modulus_ ? r - modulus_ : r;
}

int BoundaryFunction::symmetric_sum(const std::vector<bool>& in_a) const {
  int s = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    if (in_a.at(v)) s += residues_[v];
  }
  s = mod(s, modulus_);
  return 2 * s > modulus_ ? s - modulus_ : s;
}

bool BoundaryFunction::sums_to_zero() const {
  long long s = 0;
  for (int r : residues_) s += r;
  return s % modulus_ == 0;
}

bool BoundaryFunction::is_parity_compliant(const SignedGraph& g, int* bad_vertex) const {
  if (bad_vertex) *bad_vertex = -1;
  if (modulus_ % 2 != 0 || vertex_count() != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((residues_[v] - g.degree(v)) % 2 != 0) {
      if (bad_vertex) *bad_vertex = v;
      return false;
    }
  }
  return sums_to_zero();
}

BoundaryFunction positive_degree_boundary(const SignedGraph& g, int c, int modulus) {
  std::vector<int> r(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) r[v] = mod(c * g.positive_degree(v), modulus);
  return BoundaryFunction(modulus, std::move(r));
}

BoundaryFunction boundary_of(const SignedGraph& g, const Orientation& d, int modulus) {
  std::vector<int> r(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) r[v] = d.imbalance(g, v);
  return BoundaryFunction(modulus, std::move(r));
}

// ---- modulo l-orientations -------------------------------------------------------

int mod_orientation_defect(const SignedGraph& signs, const Orientation& d, int ell, int v) {
  return (ell - 1) * d.imbalance(signs, v, Sign::Positive) - d.imbalance(signs, v, Sign::Negative);
}

bool verify_mod_orientation(const ModOrientationCertificate& cert, const SignedGraph& original) {
  if (!cert.signature_used.same_underlying(original)) {
    throw PreconditionError("certificate signature is on a different graph");
  }
  if (cert.ell < 2) throw PreconditionError("modulus l must be at least 2");
  check_same_graph(original, cert.orientation);
  if (!is_inversing_equivalent(cert.signature_used, original)) return false;
  for (int v = 0; v < original.vertex_count(); ++v) {
    if (mod_orientation_defect(cert.signature_used, cert.orientation, cert.ell, v) != 0) return false;
  }
  return true;
}

namespace {

// Options per edge: bit 0 reverses the reference arc, bit 1 flips the sign.
struct ModOrientationSpec {
  const SignedGraph* g;
  int ell;
  std::vector<int> x, y, parity, target;

  explicit ModOrientationSpec(const SignedGraph& piece, int l)
      : g(&piece), ell(l), x(piece.vertex_count()), y(piece.vertex_count()), parity(piece.vertex_count()),
        target(piece.vertex_count()) {
    for (int v = 0; v < piece.vertex_count(); ++v) target[v] = piece.negative_degree(v) % 2;
  }
  int options(int) const { return 4; }
  void apply(int e, int o, int s) {
    const Edge& edge = g->edge(e);
    int tail = (o & 1) ? edge.w : edge.u;
    int head = (o & 1) ? edge.u : edge.w;
    Sign sign = (o & 2) ? -edge.sign : edge.sign;
    std::vector<int>& acc = sign == Sign::Positive ? x : y;
    acc[tail] += s;
    acc[head] -= s;
    if (sign == Sign::Negative) {
      parity[edge.u] ^= 1;
      parity[edge.w] ^= 1;
    }
  }
  bool vertex_ok(int v, int open) const {
    int defect = (ell - 1) * x[v] - y[v];
    if (open == 0) return defect == 0 && parity[v] == target[v];
    return std::abs(defect) <= (ell - 1) * open;
  }
};

}  // namespace

ModOrientationSearch find_mod_orientation(const SignedGraph& g, int ell, const SearchBudget& budget) {
  if (ell < 2) throw PreconditionError("modulus l must be at least 2");
  ModOrientationSearch result;
  if (ell % 2 == 1 && !negative_cut_vertices(g).empty()) return result;
  if (ell % 2 == 0 && !all_degrees_even(g)) return result;

  BudgetClock clock(budget);
  std::vector<int> choice;
  result.status = dfs_by_components(
      g, [&](const detail::Piece& piece) { return ModOrientationSpec(piece.graph, ell); }, clock, choice);
  if (result.status != SearchStatus::Found) return result;

  std::vector<Sign> signs(g.edge_count());
  std::vector<Arc> arcs(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    arcs[e] = (choice[e] & 1) ? Arc{edge.w, edge.u} : Arc{edge.u, edge.w};
    signs[e] = (choice[e] & 2) ? -edge.sign : edge.sign;
  }
  result.certificate = ModOrientationCertificate{g.with_signs(signs), Orientation(g, std::move(arcs)), ell};
  return result;
}

// ---- partition form --------------------------------------------------------------

PartitionVerdict verify_partition_certificate(const PartitionCertificate& pc, const SignedGraph& original) {
  const int m = original.edge_count();
  check_same_graph(original, pc.orientation);
  std::vector<int> owner(m, -1);
  for (std::size_t i = 0; i < pc.parts.size(); ++i) {
    for (int e : pc.parts[i]) {
      if (e < 0 || e >= m) throw PreconditionError("part " + std::to_string(i) + " names unknown edge " + std::to_string(e));
      if (owner[e] >= 0) throw PreconditionError("edge " + std::to_string(e) + " lies in two parts");
      owner[e] = static_cast<int>(i);
    }
  }
  for (int e = 0; e < m; ++e) {
    if (owner[e] < 0) throw PreconditionError("edge " + std::to_string(e) + " lies in no part");
  }

  PartitionVerdict verdict;
  const std::vector<int> target = negative_cut_vertices(original);
  for (std::size_t i = 0; i < pc.parts.size(); ++i) {
    std::vector<Sign> s(m, Sign::Negative);
    for (int e : pc.parts[i]) s[e] = Sign::Positive;
    SignedGraph sig = original.with_signs(s);
    if (is_inversing_equivalent(sig, original)) continue;
    std::vector<int> got = negative_cut_vertices(sig);
    std::vector<int> diff;
    std::set_symmetric_difference(got.begin(), got.end(), target.begin(), target.end(), std::back_inserter(diff));
    return {false, static_cast<int>(i), diff.empty() ? -1 : diff.front(),
            "part " + std::to_string(i) + " is not the positive set of an inversing-equivalent signature"};
  }

  const int n = original.vertex_count();
  std::vector<std::vector<int>> imb(pc.parts.size(), std::vector<int>(n, 0));
  for (std::size_t i = 0; i < pc.parts.size(); ++i) {
    for (int e : pc.parts[i]) {
      ++imb[i][pc.orientation.arc(e).tail];
      --imb[i][pc.orientation.arc(e).head];
    }
  }
  for (int v = 0; v < n; ++v) {
    for (std::size_t i = 1; i < pc.parts.size(); ++i) {
      if (imb[i][v] != imb[0][v]) {
        return {false, static_cast<int>(i), v,
                "parts 0 and " + std::to_string(i) + " have different imbalance at vertex " + std::to_string(v)};
      }
    }
  }
  return verdict;
}

PartitionCertificate orientation_to_partition(const ModOrientationCertificate& cert) {
  const SignedGraph& g = cert.signature_used;
  if (cert.ell < 2) throw PreconditionError("modulus l must be at least 2");
  check_same_graph(g, cert.orientation);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (mod_orientation_defect(g, cert.orientation, cert.ell, v) != 0) {
      throw PreconditionError("not a modulo " + std::to_string(cert.ell) + "-orientation at vertex " +
                              std::to_string(v));
    }
  }

  Lifted lifted = lift_chains(g, cert.orientation, true);
  PartitionCertificate pc;
  pc.parts.assign(cert.ell, {});
  pc.orientation = cert.orientation;

  std::vector<Chain> negatives;
  for (Chain& c : lifted.open) {
    if (c.sign == Sign::Positive) {
      pc.parts[0].insert(pc.parts[0].end(), c.edges.begin(), c.edges.end());
    } else {
      negatives.push_back(std::move(c));
    }
  }
  if (!negatives.empty()) {
    std::vector<int> color = color_regular(g.vertex_count(), negatives, cert.ell - 1);
    for (std::size_t i = 0; i < negatives.size(); ++i) {
      auto& part = pc.parts[1 + color[i]];
      part.insert(part.end(), negatives[i].edges.begin(), negatives[i].edges.end());
    }
  }
  place_closed(lifted.closed, pc.parts);
  for (auto& part : pc.parts) std::sort(part.begin(), part.end());
  return pc;
}

ModOrientationCertificate partition_to_orientation(const PartitionCertificate& pc, const SignedGraph& original) {
  if (pc.parts.size() < 2) throw PreconditionError("a modulo orientation needs at least two parts");
  if (PartitionVerdict v = verify_partition_certificate(pc, original); !v) {
    throw PreconditionError("invalid partition certificate: " + v.reason);
  }
  std::vector<Sign> s(original.edge_count(), Sign::Negative);
  for (int e : pc.parts[0]) s[e] = Sign::Positive;
  return {original.with_signs(s), pc.orientation, static_cast<int>(pc.parts.size())};
}

// ---- Eulerian forms --------------------------------------------------------------

std::string to_string(EulerianForm form) {
  switch (form) {
    case EulerianForm::Flow4k: return "flow-4k";
    case EulerianForm::SpecialModFlow: return "special-mod-flow";
    case EulerianForm::BoundaryOrientation: return "boundary-orientation";
    case EulerianForm::Mod2kOrientation: return "mod-2k-orientation";
  }
  return "?";
}

namespace {

bool special_value_ok(const SignedGraph& g, int e, const Rational& value, int k) {
  if (value.denominator() != 1) return false;
  auto v = value.numerator();
  if (g.is_positive(e)) return v == 2 * k - 1 || v == 2 * k + 1;
  return v == 1 || v == 4 * k - 1;
}

bool boundary_orientation_ok(const SignedGraph& g, const Orientation& d, int k) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (mod(d.imbalance(g, v) - 2 * k * g.positive_degree(v), 4 * k) != 0) return false;
  }
  return true;
}

EulerianCertificate flow_to_special(const SignedGraph& g, const EulerianCertificate& cert) {
  const int k = cert.k;
  const int m4 = 4 * k;
  const int m = g.edge_count();
  std::vector<int> r(m);
  std::vector<bool> in_e(m, false);
  for (int e = 0; e < m; ++e) {
    r[e] = mod(static_cast<int>(cert.values[e].numerator()), m4);
    in_e[e] = r[e] == 0 || r[e] == 2 * k;
  }
  // Closed trails of E' each carry +1 along the traversal.
  std::vector<std::size_t> next(g.vertex_count(), 0);
  for (int start = 0; start < g.vertex_count(); ++start) {
    while (true) {
      int v = start;
      bool moved = false;
      do {
        auto inc = g.incident(v);
        while (next[v] < inc.size() && !in_e[inc[next[v]]]) ++next[v];
        if (next[v] == inc.size()) break;
        int e = inc[next[v]];
        in_e[e] = false;
        moved = true;
        r[e] = mod(r[e] + (cert.orientation.arc(e).tail == v ? 1 : -1), m4);
        v = g.edge(e).other(v);
      } while (v != start);
      if (!moved) break;
      if (v != start) throw Error("zero-class subgraph is not even");
    }
  }
  EulerianCertificate out{EulerianForm::SpecialModFlow, k, cert.orientation, {}, std::nullopt};
  for (int x : r) out.values.emplace_back(x);
  return out;
}

EulerianCertificate special_to_boundary(const SignedGraph& g, const EulerianCertificate& cert) {
  const int k = cert.k;
  Orientation d = cert.orientation;
  for (int e = 0; e < g.edge_count(); ++e) {
    int gval = mod(static_cast<int>(cert.values[e].numerator()) + (g.is_positive(e) ? 2 * k : 0), 4 * k);
    if (gval != 1) d.flip(e);
  }
  return {EulerianForm::BoundaryOrientation, k, std::move(d), {}, std::nullopt};
}

EulerianCertificate boundary_to_mod2k(const SignedGraph& g, const EulerianCertificate& cert) {
  const int k = cert.k;
  Lifted lifted = lift_chains(g, cert.orientation, false);
  std::vector<std::vector<int>> parts(2 * k);
  if (!lifted.open.empty()) {
    std::vector<int> color = color_regular(g.vertex_count(), lifted.open, 2 * k);
    for (std::size_t i = 0; i < lifted.open.size(); ++i) {
      parts[color[i]].insert(parts[color[i]].end(), lifted.open[i].edges.begin(), lifted.open[i].edges.end());
    }
  }
  place_closed(lifted.closed, parts);
  std::vector<Sign> s(g.edge_count(), Sign::Negative);
  for (int e : parts[0]) s[e] = Sign::Positive;
  return {EulerianForm::Mod2kOrientation, k, cert.orientation, {}, g.with_signs(s)};
}

EulerianCertificate mod2k_to_flow(const SignedGraph& g, const EulerianCertificate& cert) {
  const int k = cert.k;
  const SignedGraph& sig = *cert.signature_used;
  std::vector<Rational> values(g.edge_count());
  bool same = true;
  for (int e = 0; e < g.edge_count(); ++e) {
    int v = sig.is_positive(e) ? 2 * k - 1 : -1;
    if (sig.sign(e) != g.sign(e)) {
      v -= 2 * k;  // inversing on an even subgraph shifts by half the modulus
      same = false;
    }
    values[e] = Rational(v);
  }
  EulerianCertificate out{EulerianForm::Flow4k, k, cert.orientation, {}, std::nullopt};
  if (same) {
    out.values = std::move(values);
    return out;
  }
  FlowAssignment residues{FlowKindSpec::mod_pq(4 * k, 2 * k - 1), {}};
  for (const Rational& v : values) residues.values.emplace_back(mod(static_cast<int>(v.numerator()), 4 * k));
  out.values = modulo_to_integer(g, cert.orientation, residues).values;
  return out;
}

struct SpecialFlowSpec {
  const SignedGraph* g;
  int k;
  std::vector<int> acc;

  SpecialFlowSpec(const SignedGraph& piece, int k_) : g(&piece), k(k_), acc(piece.vertex_count(), 0) {}
  int options(int) const { return 2; }
  int value(int e, int o) const {
    if (g->is_positive(e)) return o == 0 ? 2 * k - 1 : 2 * k + 1;
    return o == 0 ? 1 : 4 * k - 1;
  }
  void apply(int e, int o, int s) {
    int v = value(e, o);
    acc[g->edge(e).u] += s * v;
    acc[g->edge(e).w] -= s * v;
  }
  bool vertex_ok(int v, int open) const { return open > 0 || mod(acc[v], 4 * k) == 0; }
};

}  // namespace

bool verify_eulerian_certificate(const EulerianCertificate& cert, const SignedGraph& g) {
  if (cert.k < 1) throw PreconditionError("k must be positive");
  check_same_graph(g, cert.orientation);
  const int k = cert.k;
  switch (cert.form) {
    case EulerianForm::Flow4k: {
      if (cert.values.size() != static_cast<std::size_t>(g.edge_count())) return false;
      return verify_flow(g, cert.orientation, {FlowKindSpec::pq(4 * k, 2 * k - 1), cert.values}).ok;
    }
    case EulerianForm::SpecialModFlow: {
      if (cert.values.size() != static_cast<std::size_t>(g.edge_count())) return false;
      for (int e = 0; e < g.edge_count(); ++e) {
        if (!special_value_ok(g, e, cert.values[e], k)) return false;
      }
      for (int v = 0; v < g.vertex_count(); ++v) {
        Rational b = vertex_boundary(g, cert.orientation, cert.values, v);
        if (mod(static_cast<int>(b.numerator()), 4 * k) != 0) return false;
      }
      return true;
    }
    case EulerianForm::BoundaryOrientation:
      return boundary_orientation_ok(g, cert.orientation, k);
    case EulerianForm::Mod2kOrientation:
      if (!cert.signature_used) return false;
      return verify_mod_orientation({*cert.signature_used, cert.orientation, 2 * k}, g);
  }
  return false;
}

std::optional<EulerianCertificate> find_eulerian_certificate(const SignedGraph& g, EulerianForm form, int k,
                                                             const SearchBudget& budget) {
  if (k < 1) throw PreconditionError("k must be positive");
  switch (form) {
    case EulerianForm::Flow4k: {
      PQDecision d = decide_pq_flow(g, 4 * k, 2 * k - 1, budget);
      if (d.status == SearchStatus::Unknown) throw BudgetExceeded("flow search exhausted its budget");
      if (!d.witness) return std::nullopt;
      return EulerianCertificate{form, k, d.witness->orientation, d.witness->flow.values, std::nullopt};
    }
    case EulerianForm::SpecialModFlow: {
      BudgetClock clock(budget);
      std::vector<int> choice;
      SearchStatus s = dfs_by_components(
          g, [&](const detail::Piece& piece) { return SpecialFlowSpec(piece.graph, k); }, clock, choice);
      if (s == SearchStatus::Unknown) throw BudgetExceeded("special flow search exhausted its budget");
      if (s == SearchStatus::NotFound) return std::nullopt;
      SpecialFlowSpec host(g, k);
      EulerianCertificate cert{form, k, Orientation::reference(g), {}, std::nullopt};
      for (int e = 0; e < g.edge_count(); ++e) cert.values.emplace_back(host.value(e, choice[e]));
      return cert;
    }
    case EulerianForm::BoundaryOrientation: {
      if (!all_degrees_even(g)) return std::nullopt;
      BetaOrientationSearch s = find_beta_orientation(g, positive_degree_boundary(g, 2 * k, 4 * k), {}, budget);
      if (s.status == SearchStatus::Unknown) throw BudgetExceeded("orientation search exhausted its budget");
      if (!s.orientation) return std::nullopt;
      return EulerianCertificate{form, k, *s.orientation, {}, std::nullopt};
    }
    case EulerianForm::Mod2kOrientation: {
      ModOrientationSearch s = find_mod_orientation(g, 2 * k, budget);
      if (s.status == SearchStatus::Unknown) throw BudgetExceeded("orientation search exhausted its budget");
      if (!s.certificate) return std::nullopt;
      return EulerianCertificate{form, k, s.certificate->orientation, {}, s.certificate->signature_used};
    }
  }
  return std::nullopt;
}

EulerianCertificate convert_eulerian_certificate(const EulerianCertificate& cert, EulerianForm target,
                                                 const SignedGraph& g) {
  if (!all_degrees_even(g)) throw PreconditionError("host graph has a vertex of odd degree");
  if (!verify_eulerian_certificate(cert, g)) {
    throw PreconditionError("certificate does not verify as " + to_string(cert.form));
  }
  EulerianCertificate cur = cert;
  while (cur.form != target) {
    switch (cur.form) {
      case EulerianForm::Flow4k: cur = flow_to_special(g, cur); break;
      case EulerianForm::SpecialModFlow: cur = special_to_boundary(g, cur); break;
      case EulerianForm::BoundaryOrientation: cur = boundary_to_mod2k(g, cur); break;
      case EulerianForm::Mod2kOrientation: cur = mod2k_to_flow(g, cur); break;
    }
    if (!verify_eulerian_certificate(cur, g)) {
      throw Error("conversion to " + to_string(cur.form) + " produced an invalid certificate");
    }
  }
  return cur;
}

// ---- (Z_2k, beta)-orientations ------------------------------------------------------

namespace {

void check_beta(const SignedGraph& g, const BoundaryFunction& beta) {
  if (beta.modulus() % 2 != 0) throw PreconditionError("boundary modulus must be even");
  if (beta.vertex_count() != g.vertex_count()) throw PreconditionError("boundary does not cover every vertex");
  int bad = -1;
  if (!beta.is_parity_compliant(g, &bad)) {
    if (bad >= 0) throw PreconditionError("boundary parity differs from the degree at vertex " + std::to_string(bad));
    throw PreconditionError("boundary values do not sum to 0");
  }
}

struct BetaSpec {
  const SignedGraph* g;
  const std::vector<std::optional<Arc>>* partial;
  std::vector<int> edge_map;
  std::vector<int> target;
  int modulus;
  std::vector<int> imb;

  int options(int e) const { return (*partial)[edge_map[e]] ? 1 : 2; }
  bool reversed(int e, int o) const {
    const auto& fixed = (*partial)[edge_map[e]];
    if (fixed) return fixed->tail != g->edge(e).u;
    return o == 1;
  }
  void apply(int e, int o, int s) {
    const Edge& edge = g->edge(e);
    int tail = reversed(e, o) ? edge.w : edge.u;
    int head = reversed(e, o) ? edge.u : edge.w;
    imb[tail] += s;
    imb[head] -= s;
  }
  bool vertex_ok(int v, int open) const {
    int lo = imb[v] - open;
    int t = lo + mod(target[v] - lo, modulus);
    return t <= imb[v] + open;
  }
};

}  // namespace

bool verify_beta_orientation(const SignedGraph& g, const Orientation& d, const BoundaryFunction& beta) {
  check_beta(g, beta);
  check_same_graph(g, d);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (mod(d.imbalance(g, v) - beta.residue(v), beta.modulus()) != 0) return false;
  }
  return true;
}

FlippedArc flip_arc(const SignedGraph& g, const Orientation& d, const BoundaryFunction& beta, int e) {
  check_beta(g, beta);
  check_same_graph(g, d);
  const Arc a = d.arc(e);
  std::vector<int> r = beta.residues();
  r[a.tail] -= 2;
  r[a.head] += 2;
  return {d.flipped(e), BoundaryFunction(beta.modulus(), std::move(r))};
}

BetaOrientationSearch find_beta_orientation(const SignedGraph& g, const BoundaryFunction& beta,
                                            const std::vector<std::optional<Arc>>& partial,
                                            const SearchBudget& budget) {
  check_beta(g, beta);
  std::vector<std::optional<Arc>> fixed = partial;
  if (fixed.empty()) fixed.assign(g.edge_count(), std::nullopt);
  if (fixed.size() != static_cast<std::size_t>(g.edge_count())) {
    throw PreconditionError("partial orientation does not cover the edge list");
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!fixed[e]) continue;
    const Edge& edge = g.edge(e);
    bool ok = (fixed[e]->tail == edge.u && fixed[e]->head == edge.w) ||
              (fixed[e]->tail == edge.w && fixed[e]->head == edge.u);
    if (!ok) throw PreconditionError("pre-assigned arc " + std::to_string(e) + " does not match its edge");
  }

  BudgetClock clock(budget);
  std::vector<int> choice;
  BetaOrientationSearch result;
  result.status = dfs_by_components(
      g,
      [&](const detail::Piece& piece) {
        BetaSpec spec{&piece.graph, &fixed, piece.edge_map, {}, beta.modulus(),
                      std::vector<int>(piece.graph.vertex_count(), 0)};
        for (int host : piece.vertex_map) spec.target.push_back(beta.residue(host));
        return spec;
      },
      clock, choice);
  if (result.status != SearchStatus::Found) return result;

  std::vector<Arc> arcs(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    bool rev = fixed[e] ? fixed[e]->tail != edge.u : choice[e] == 1;
    arcs[e] = rev ? Arc{edge.w, edge.u} : Arc{edge.u, edge.w};
  }
  result.orientation = Orientation(g, std::move(arcs));
  return result;
}

// ---- flow <-> orientation transfer ----------------------------------------------------

namespace {

void check_transfer_args(int p, int q) {
  if (q < 1 || p < q) throw PreconditionError("transfer needs p >= q >= 1");
}

}  // namespace

TransferOrientation flow_to_orientation(const SignedGraph& g, int p, int q, const FlowWitness& flow) {
  check_transfer_args(p, q);
  if (!(flow.flow.kind == FlowKindSpec::pq(2 * p, q))) {
    throw PreconditionError("expected a (" + std::to_string(2 * p) + "," + std::to_string(q) + ")-flow");
  }
  if (FlowVerdict v = verify_flow(g, flow.orientation, flow.flow); !v) {
    throw PreconditionError("invalid flow: " + v.reason);
  }
  const int copies = 2 * p - 2 * q;
  const int m4 = 4 * p;
  TransferOrientation out{multiply_edges(g.with_all_signs(Sign::Positive), copies), {}, {}};
  std::vector<Arc> arcs(out.multigraph.graph.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    int doubled = 2 * static_cast<int>(flow.flow.values[e].numerator());
    int t = mod(doubled - (g.is_positive(e) ? 2 * p : 0), m4);
    if (2 * t > m4) t -= m4;
    if (std::abs(t) > copies || t % 2 != 0) throw Error("flow value outside the transferable range");
    int forward = (copies + t) / 2;
    const Arc a = flow.orientation.arc(e);
    for (int j = 0; j < copies; ++j) arcs[e * copies + j] = j < forward ? a : Arc{a.head, a.tail};
  }
  out.orientation = Orientation(out.multigraph.graph, std::move(arcs));
  out.beta = positive_degree_boundary(g, 2 * p, m4);
  if (!verify_beta_orientation(out.multigraph.graph, out.orientation, out.beta)) {
    throw Error("transferred orientation misses the boundary");
  }
  return out;
}

FlowWitness orientation_to_flow(const SignedGraph& g, int p, int q, const Orientation& multi) {
  check_transfer_args(p, q);
  const int copies = 2 * p - 2 * q;
  const int m4 = 4 * p;
  MultipliedGraph mg = multiply_edges(g.with_all_signs(Sign::Positive), copies);
  BoundaryFunction beta = positive_degree_boundary(g, 2 * p, m4);
  if (!verify_beta_orientation(mg.graph, multi, beta)) {
    throw PreconditionError("orientation is not a (Z_" + std::to_string(m4) + ", beta)-orientation");
  }
  Orientation ref = Orientation::reference(g);
  FlowAssignment residues{FlowKindSpec::mod_pq(m4, 2 * q), {}};
  for (int e = 0; e < g.edge_count(); ++e) {
    int f_i = 0;
    for (int j = 0; j < copies; ++j) f_i += multi.arc(e * copies + j) == ref.arc(e) ? 1 : -1;
    residues.values.emplace_back(mod(f_i + (g.is_positive(e) ? 2 * p : 0), m4));
  }
  FlowAssignment integral = modulo_to_integer(g, ref, residues);
  FlowWitness out{ref, {FlowKindSpec::pq(2 * p, q), {}}};
  for (const Rational& v : integral.values) out.flow.values.push_back(v / 2);
  if (!verify_flow(g, out.orientation, out.flow).ok) throw Error("transferred flow does not verify");
  return out;
}

// ---- group connectivity ------------------------------------------------------------

namespace {

void check_zk_guard(const SignedGraph& g, int k) {
  if (k < 2) throw PreconditionError("k must be at least 2");
  if (g.vertex_count() > 5 || g.edge_count() > 10) {
    throw BudgetExceeded("group connectivity is only checked up to 5 vertices and 10 edges");
  }
  long long states = 1;
  for (int v = 0; v < g.vertex_count(); ++v) states *= k;
  if (states > 2'000'000) throw BudgetExceeded("too many boundary vectors for k = " + std::to_string(k));
}

}  // namespace

bool zk_connected(const SignedGraph& g, int k, const SearchBudget& budget) {
  check_zk_guard(g, k);
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<long long> weight(n, 1);
  for (int v = 1; v < n; ++v) weight[v] = weight[v - 1] * k;
  const long long states = weight[n - 1] * k;
  auto digit = [&](long long s, int v) { return static_cast<int>((s / weight[v]) % k); };
  auto add = [&](long long s, int v, int c) { return s + (mod(digit(s, v) + c, k) - digit(s, v)) * weight[v]; };

  // Boundaries of nowhere-zero functions on the reference orientation.
  BudgetClock clock(budget);
  std::vector<char> reach(static_cast<std::size_t>(states), 0);
  reach[0] = 1;
  for (int e = 0; e < g.edge_count(); ++e) {
    std::vector<char> next(reach.size(), 0);
    const Edge& edge = g.edge(e);
    for (long long s = 0; s < states; ++s) {
      if (!reach[s]) continue;
      if (!clock.tick()) throw BudgetExceeded("group connectivity check exhausted its budget");
      for (int c = 1; c < k; ++c) next[add(add(s, edge.u, c), edge.w, -c)] = 1;
    }
    reach.swap(next);
  }
  for (long long s = 0; s < states; ++s) {
    int sum = 0;
    for (int v = 0; v < n; ++v) sum += digit(s, v);
    if (sum % k == 0 && !reach[s]) return false;
  }
  return true;
}

bool zk_connected_by_avoidance(const SignedGraph& g, int k, int samples, unsigned seed) {
  check_zk_guard(g, k);
  if (!is_connected(g)) throw PreconditionError("the avoidance form needs a connected graph");
  const int m = g.edge_count();
  if (g.vertex_count() <= 1) return true;
  const detail::EdgePlan plan = detail::make_edge_plan(g);

  std::vector<int> forbid(m, 0), acc(g.vertex_count(), 0);
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == plan.order.size()) return true;
    const int e = plan.order[i];
    const Edge& edge = g.edge(e);
    auto try_value = [&](int c) {
      if (c == forbid[e]) return false;
      acc[edge.u] += c;
      acc[edge.w] -= c;
      bool ok = go(i + 1);
      acc[edge.u] -= c;
      acc[edge.w] += c;
      return ok;
    };
    if (int v = plan.forced_by[i]; v >= 0) {
      int need = mod(edge.u == v ? -acc[v] : acc[v], k);
      return try_value(need);
    }
    for (int c = 0; c < k; ++c) {
      if (try_value(c)) return true;
    }
    return false;
  };

  long long total = 1;
  bool exhaustive = true;
  for (int e = 0; e < m && exhaustive; ++e) {
    total *= k;
    exhaustive = total <= 1'000'000;
  }
  if (exhaustive) {
    for (long long code = 0; code < total; ++code) {
      long long c = code;
      for (int e = 0; e < m; ++e, c /= k) forbid[e] = static_cast<int>(c % k);
      if (!go(0)) return false;
    }
    return true;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, k - 1);
  for (int s = 0; s < samples; ++s) {
    for (int& f : forbid) f = pick(rng);
    if (!go(0)) return false;
  }
  return true;
}

}  // namespace monoflow
