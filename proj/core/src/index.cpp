#include "monoflow/index.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "components.hpp"
#include "monoflow/errors.hpp"

namespace monoflow {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::NotFound:
      return "not-found";
    case SearchStatus::Unknown:
      return "unknown";
  }
  return "?";
}

BudgetClock::BudgetClock(const SearchBudget& budget) : node_limit_(budget.node_limit) {
  if (budget.time_limit_seconds > 0) {
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(budget.time_limit_seconds));
  }
}

bool BudgetClock::tick() {
  if (exhausted_) return false;
  ++nodes_;
  ++total_nodes_;
  if (node_limit_ != 0 && nodes_ > node_limit_) exhausted_ = true;
  if (deadline_ && (total_nodes_ & 0x3FF) == 0 && std::chrono::steady_clock::now() > *deadline_) {
    out_of_time_ = true;
    exhausted_ = true;
  }
  return !exhausted_;
}

namespace {

void check_pq_args(int p, int q) {
  if (p <= 0 || p % 2 != 0) throw PreconditionError("p must be a positive even integer");
  if (q < 1 || 2 * q > p) throw PreconditionError("need 1 <= 2q <= p");
}

// Signed integer (p,q)-flow search on one connected piece, reference
// orientation u -> w per edge.
class PQSearch {
 public:
  PQSearch(const SignedGraph& g, int p, int q, BudgetClock& clock)
      : g_(g), p_(p), q_(q), clock_(clock), plan_(detail::make_edge_plan(g)) {
    admissible_.assign(2 * p + 1, {false, false});
    for (int x = -p; x <= p; ++x) {
      int a = std::abs(x);
      bool pos = a >= q && a <= p - q;
      bool neg = a <= p / 2 - q || (a >= p / 2 + q && a <= p - 1);
      admissible_[x + p] = {pos, neg};
    }
    for (int a = 0; a < p; ++a) {
      for (int s : {1, -1}) {
        if (a == 0 && s == -1) continue;
        int x = s * a;
        if (admissible_[x + p].first) positive_values_.push_back(x);
        if (admissible_[x + p].second) negative_values_.push_back(x);
      }
    }
    int n = g.vertex_count();
    boundary_.assign(n, 0);
    capacity_.assign(n, 0);
    open_.assign(n, 0);
    value_.assign(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
      int cap = max_abs(e);
      capacity_[g.edge(e).u] += cap;
      capacity_[g.edge(e).w] += cap;
      open_[g.edge(e).u] += 1;
      open_[g.edge(e).w] += 1;
    }
  }

  SearchStatus run() {
    if (dfs(0, false)) return SearchStatus::Found;
    return clock_.exhausted() ? SearchStatus::Unknown : SearchStatus::NotFound;
  }

  const std::vector<int>& values() const { return value_; }

 private:
  int max_abs(int e) const {
    if (g_.is_positive(e)) return p_ - q_;
    return p_ / 2 + q_ <= p_ - 1 ? p_ - 1 : p_ / 2 - q_;
  }

  bool admissible(int e, int x) const {
    if (x < -p_ || x > p_) return false;
    const auto& entry = admissible_[x + p_];
    return g_.is_positive(e) ? entry.first : entry.second;
  }

  // Applies x to edge e; returns false if an endpoint is now hopeless.
  bool apply(int e, int x) {
    const Edge& edge = g_.edge(e);
    value_[e] = x;
    int cap = max_abs(e);
    boundary_[edge.u] += x;
    boundary_[edge.w] -= x;
    capacity_[edge.u] -= cap;
    capacity_[edge.w] -= cap;
    open_[edge.u] -= 1;
    open_[edge.w] -= 1;
    return feasible(edge.u) && feasible(edge.w);
  }

  void undo(int e) {
    const Edge& edge = g_.edge(e);
    int x = value_[e];
    int cap = max_abs(e);
    boundary_[edge.u] -= x;
    boundary_[edge.w] += x;
    capacity_[edge.u] += cap;
    capacity_[edge.w] += cap;
    open_[edge.u] += 1;
    open_[edge.w] += 1;
    value_[e] = 0;
  }

  bool feasible(int v) const {
    if (open_[v] == 0) return boundary_[v] == 0;
    return std::abs(boundary_[v]) <= capacity_[v];
  }

  bool dfs(std::size_t step, bool symmetry_used) {
    if (step == plan_.order.size()) return true;
    if (!clock_.tick()) return false;
    int e = plan_.order[step];
    int forcer = plan_.forced_by[step];
    if (forcer >= 0) {
      int coefficient = g_.edge(e).u == forcer ? 1 : -1;
      int x = -coefficient * boundary_[forcer];
      if (!admissible(e, x)) return false;
      bool ok = apply(e, x) && dfs(step + 1, symmetry_used);
      if (ok) return true;
      undo(e);
      return false;
    }
    const auto& candidates = g_.is_positive(e) ? positive_values_ : negative_values_;
    for (int x : candidates) {
      if (!symmetry_used && x < 0) continue;
      bool ok = apply(e, x) && dfs(step + 1, true);
      if (ok) return true;
      undo(e);
      if (clock_.exhausted()) return false;
    }
    return false;
  }

  const SignedGraph& g_;
  int p_;
  int q_;
  BudgetClock& clock_;
  detail::EdgePlan plan_;
  std::vector<std::pair<bool, bool>> admissible_;
  std::vector<int> positive_values_;
  std::vector<int> negative_values_;
  std::vector<int> boundary_;
  std::vector<int> capacity_;
  std::vector<int> open_;
  std::vector<int> value_;
};

}  // namespace

PQDecision decide_pq_flow(const SignedGraph& g, int p, int q, BudgetClock& clock) {
  check_pq_args(p, q);
  std::uint64_t before = clock.total_nodes();
  PQDecision decision;
  std::vector<Rational> values(g.edge_count(), Rational(0));
  bool unknown = false;
  for (const detail::Piece& piece : detail::split_components(g)) {
    if (piece.graph.edge_count() == 0) continue;
    PQSearch search(piece.graph, p, q, clock);
    SearchStatus status = search.run();
    if (status == SearchStatus::NotFound) {
      decision.status = SearchStatus::NotFound;
      decision.nodes = clock.total_nodes() - before;
      return decision;
    }
    if (status == SearchStatus::Unknown) {
      unknown = true;
      break;
    }
    for (int e = 0; e < piece.graph.edge_count(); ++e) values[piece.edge_map[e]] = Rational(search.values()[e]);
  }
  decision.nodes = clock.total_nodes() - before;
  if (unknown) {
    decision.status = SearchStatus::Unknown;
    return decision;
  }
  decision.status = SearchStatus::Found;
  decision.witness = FlowWitness{Orientation::reference(g), FlowAssignment{FlowKindSpec::pq(p, q), values}};
  return decision;
}

PQDecision decide_pq_flow(const SignedGraph& g, int p, int q, const SearchBudget& budget) {
  BudgetClock clock(budget);
  return decide_pq_flow(g, p, q, clock);
}

// ---- oracle -------------------------------------------------------------------------

namespace {

void check_oracle_guard(const SignedGraph& g, int p) {
  if (!(g.edge_count() <= 8 || p <= 4)) {
    throw BudgetExceeded("oracle enumeration refused: needs |E| <= 8 or p <= 4");
  }
}

struct OracleBest {
  int max_q = 0;
  std::vector<int> values;  // residues on the reference orientation
};

// Every balanced Z_p vector is fixed by its co-tree values; tree values are
// linear combinations read off leaf-first.
OracleBest oracle_scan(const SignedGraph& g, int p) {
  SpanningForest forest = spanning_forest(g);
  std::vector<int> cotree;
  std::vector<int> column(g.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!forest.in_tree[e]) {
      column[e] = static_cast<int>(cotree.size());
      cotree.push_back(e);
    }
  }
  const int k = static_cast<int>(cotree.size());
  std::vector<std::vector<int>> coef(g.edge_count(), std::vector<int>(k, 0));
  for (int j = 0; j < k; ++j) coef[cotree[j]][j] = 1;
  for (auto it = forest.order.rbegin(); it != forest.order.rend(); ++it) {
    int v = *it;
    int pe = forest.parent_edge[v];
    if (pe < 0) continue;
    // sum_e c_v(e) x_e = 0 at v, solved for the parent edge.
    std::vector<int> acc(k, 0);
    for (int e : g.incident(v)) {
      if (e == pe) continue;
      int c = g.edge(e).u == v ? 1 : -1;
      for (int j = 0; j < k; ++j) acc[j] += c * coef[e][j];
    }
    int cp = g.edge(pe).u == v ? 1 : -1;
    for (int j = 0; j < k; ++j) coef[pe][j] = -cp * acc[j];
  }

  auto q_allowed = [&](int e, int residue) {
    if (g.is_positive(e)) return std::min(residue, p - residue);
    return std::abs(residue - p / 2);
  };

  OracleBest best;
  std::vector<int> digits(k, 0);
  std::vector<int> residue(g.edge_count(), 0);
  while (true) {
    int worst = p;
    for (int e = 0; e < g.edge_count() && worst > best.max_q; ++e) {
      long long sum = 0;
      for (int j = 0; j < k; ++j) sum += static_cast<long long>(coef[e][j]) * digits[j];
      int r = static_cast<int>(((sum % p) + p) % p);
      residue[e] = r;
      worst = std::min(worst, q_allowed(e, r));
    }
    if (worst > best.max_q) {
      best.max_q = worst;
      best.values = residue;
      if (best.max_q >= p / 2) break;
    }
    int j = 0;
    while (j < k && ++digits[j] == p) digits[j++] = 0;
    if (j == k) break;
  }
  return best;
}

}  // namespace

std::optional<int> oracle_max_q(const SignedGraph& g, int p) {
  if (p <= 0 || p % 2 != 0) throw PreconditionError("p must be a positive even integer");
  check_oracle_guard(g, p);
  if (g.edge_count() == 0) return p / 2;
  OracleBest best = oracle_scan(g, p);
  if (best.max_q < 1) return std::nullopt;
  return best.max_q;
}

std::optional<FlowWitness> oracle_pq_flow(const SignedGraph& g, int p, int q) {
  check_pq_args(p, q);
  check_oracle_guard(g, p);
  Orientation d = Orientation::reference(g);
  if (g.edge_count() == 0) return FlowWitness{d, FlowAssignment{FlowKindSpec::pq(p, q), {}}};
  OracleBest best = oracle_scan(g, p);
  if (best.max_q < q) return std::nullopt;
  FlowAssignment mod{FlowKindSpec::mod_pq(p, q), {}};
  for (int v : best.values) mod.values.emplace_back(v);
  return FlowWitness{d, modulo_to_integer(g, d, mod)};
}

// ---- other deciders -----------------------------------------------------------------

std::optional<std::vector<Rational>> decide_circular_r_by_cuts(const SignedGraph& g, const Rational& r) {
  if (r < Rational(2)) throw PreconditionError("r must be at least 2");
  const Rational one(1);
  const int m = g.edge_count();
  Orientation d = Orientation::reference(g);
  // Choices: positive edges {+, -}; negative edges {low (both directions), high +, high -}.
  auto choice_count = [&](int e) { return g.is_positive(e) ? 2 : 3; };
  auto bounds_for = [&](int e, int c) -> EdgeBounds {
    if (g.is_positive(e)) return c == 0 ? EdgeBounds{one, r - one} : EdgeBounds{-(r - one), -one};
    if (c == 0) return {-(r / 2 - one), r / 2 - one};
    if (c == 1) return {r / 2 + one, r};
    return {-r, -(r / 2 + one)};
  };
  std::vector<int> choice(m, 0);
  std::vector<EdgeBounds> bounds(m);
  while (true) {
    for (int e = 0; e < m; ++e) bounds[e] = bounds_for(e, choice[e]);
    if (auto values = bounded_circulation(g, d, bounds)) return values;
    // Negating every value is a symmetry, so edge 0 never takes its last
    // (negated) choice.
    int e = 0;
    while (e < m) {
      int limit = choice_count(e) - (e == 0 ? 1 : 0);
      if (++choice[e] < limit) break;
      choice[e] = 0;
      ++e;
    }
    if (e == m) break;
  }
  if (m == 0) return std::vector<Rational>{};
  return std::nullopt;
}

namespace {

class ModRSearch {
 public:
  ModRSearch(const SignedGraph& g, int p, int q)
      : g_(g), r_(p, q), kind_(FlowKindSpec::circular_mod_r(Rational(p, q))), plan_(detail::make_edge_plan(g)) {
    for (int i = 0; i < p; ++i) {
      Rational v(i, q);
      if (value_admissible(kind_, Sign::Positive, v)) positive_values_.push_back(v);
      if (value_admissible(kind_, Sign::Negative, v)) negative_values_.push_back(v);
    }
    boundary_.assign(g.vertex_count(), Rational(0));
    open_.assign(g.vertex_count(), 0);
    value_.assign(g.edge_count(), Rational(0));
    for (const Edge& e : g.edges()) {
      open_[e.u] += 1;
      open_[e.w] += 1;
    }
  }

  bool run() { return dfs(0); }
  const std::vector<Rational>& values() const { return value_; }

 private:
  bool closed_ok(int v) const { return open_[v] != 0 || mod_positive(boundary_[v], r_) == Rational(0); }

  bool apply(int e, const Rational& x) {
    const Edge& edge = g_.edge(e);
    value_[e] = x;
    boundary_[edge.u] += x;
    boundary_[edge.w] -= x;
    open_[edge.u] -= 1;
    open_[edge.w] -= 1;
    return closed_ok(edge.u) && closed_ok(edge.w);
  }

  void undo(int e) {
    const Edge& edge = g_.edge(e);
    boundary_[edge.u] -= value_[e];
    boundary_[edge.w] += value_[e];
    open_[edge.u] += 1;
    open_[edge.w] += 1;
    value_[e] = Rational(0);
  }

  bool dfs(std::size_t step) {
    if (step == plan_.order.size()) return true;
    int e = plan_.order[step];
    int forcer = plan_.forced_by[step];
    if (forcer >= 0) {
      Rational x = mod_positive(g_.edge(e).u == forcer ? -boundary_[forcer] : boundary_[forcer], r_);
      if (!value_admissible(kind_, g_.sign(e), x)) return false;
      if (apply(e, x) && dfs(step + 1)) return true;
      undo(e);
      return false;
    }
    for (const Rational& x : g_.is_positive(e) ? positive_values_ : negative_values_) {
      if (apply(e, x) && dfs(step + 1)) return true;
      undo(e);
    }
    return false;
  }

  const SignedGraph& g_;
  Rational r_;
  FlowKindSpec kind_;
  detail::EdgePlan plan_;
  std::vector<Rational> positive_values_;
  std::vector<Rational> negative_values_;
  std::vector<Rational> boundary_;
  std::vector<int> open_;
  std::vector<Rational> value_;
};

}  // namespace

std::optional<FlowWitness> decide_circular_mod_r(const SignedGraph& g, int p, int q) {
  check_pq_args(p, q);
  std::vector<Rational> values(g.edge_count(), Rational(0));
  for (const detail::Piece& piece : detail::split_components(g)) {
    if (piece.graph.edge_count() == 0) continue;
    ModRSearch search(piece.graph, p, q);
    if (!search.run()) return std::nullopt;
    for (int e = 0; e < piece.graph.edge_count(); ++e) values[piece.edge_map[e]] = search.values()[e];
  }
  return FlowWitness{Orientation::reference(g),
                     FlowAssignment{FlowKindSpec::circular_mod_r(Rational(p, q)), std::move(values)}};
}

// ---- circular flow index --------------------------------------------------------------

std::vector<std::pair<int, int>> index_candidates(int max_numerator) {
  std::vector<std::pair<int, int>> fractions;
  for (int a = 2; a <= max_numerator; ++a) {
    for (int b = 1; 2 * b <= a; ++b) {
      if (std::gcd(a, b) == 1) fractions.emplace_back(a, b);
    }
  }
  std::sort(fractions.begin(), fractions.end(), [](const auto& x, const auto& y) {
    return static_cast<long long>(x.first) * y.second < static_cast<long long>(y.first) * x.second;
  });
  for (auto& [a, b] : fractions) {
    if (a % 2 != 0) {
      a *= 2;
      b *= 2;
    }
  }
  return fractions;
}

namespace {

void attach_certificate(const SignedGraph& g, IndexResult& result) {
  FlowWitness circular{result.pq_witness->orientation, pq_to_circular(result.pq_witness->flow)};
  make_nonnegative(circular.orientation, circular.flow);
  orient_zero_edges(g, circular.orientation, circular.flow);
  result.certificate = find_tight_cut(g, circular.orientation, circular.flow);
  result.circular_witness = std::move(circular);
}

}  // namespace

IndexResult circular_flow_index(const SignedGraph& g, const SearchBudget& budget) {
  IndexResult result;
  const int m = g.edge_count();
  if (m == 0) {
    result.kind = IndexKind::Finite;
    result.value = Rational(2);
    result.p = 2;
    result.q = 1;
    result.pq_witness = FlowWitness{Orientation::reference(g), FlowAssignment{FlowKindSpec::pq(2, 1), {}}};
    result.circular_witness =
        FlowWitness{Orientation::reference(g), FlowAssignment{FlowKindSpec::circular_r(Rational(2)), {}}};
    return result;
  }
  if (has_positive_bridge(g)) {
    result.kind = IndexKind::Infeasible;
    result.note = "positive bridge";
    return result;
  }
  const int sound = 2 * m;
  const int max_p = budget.max_p.value_or(sound);
  result.max_p_used = max_p;
  result.bound_truncated = max_p < sound;

  BudgetClock clock(budget);
  bool saw_unknown = false;
  for (auto [p, q] : index_candidates(max_p)) {
    clock.reset_nodes();
    PQDecision decision = decide_pq_flow(g, p, q, clock);
    result.nodes += decision.nodes;
    if (decision.status == SearchStatus::Unknown) {
      saw_unknown = true;
      // A spent deadline ends the sweep; a node cap only skips this candidate.
      if (clock.out_of_time()) break;
      continue;
    }
    if (decision.status == SearchStatus::Found) {
      result.p = p;
      result.q = q;
      result.value = Rational(p, q);
      result.pq_witness = std::move(decision.witness);
      attach_certificate(g, result);
      if (saw_unknown || result.bound_truncated) {
        result.kind = IndexKind::Unknown;
        result.has_upper_bound = true;
        result.note = saw_unknown ? "search budget exhausted below this value; it is an upper bound"
                                  : "candidate bound below 2|E|; the value is an upper bound";
      } else {
        result.kind = IndexKind::Finite;
      }
      return result;
    }
  }
  if (saw_unknown) {
    result.kind = IndexKind::Unknown;
    result.note = "search budget exhausted";
  } else if (result.bound_truncated) {
    result.kind = IndexKind::Unknown;
    result.note = "no flow with numerator at most " + std::to_string(max_p);
  } else {
    result.kind = IndexKind::Infeasible;
    result.note = "no candidate admits a flow";
  }
  return result;
}

// ---- circular chromatic number ------------------------------------------------------------

std::optional<std::vector<int>> find_pq_tension(const SignedGraph& g, int p, int q, BudgetClock& clock,
                                                bool* exhausted) {
  check_pq_args(p, q);
  const int n = g.vertex_count();
  std::vector<char> positive_ok(p, 0);
  std::vector<char> negative_ok(p, 0);
  for (int t = 0; t < p; ++t) {
    positive_ok[t] = t >= q && t <= p - q;
    negative_ok[t] = t <= p / 2 - q || t >= p / 2 + q;
  }
  SpanningForest forest = spanning_forest(g);
  const std::vector<int>& order = forest.order;
  std::vector<int> position(n, 0);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<int> phi(n, -1);

  auto consistent = [&](int v) {
    for (int e : g.incident(v)) {
      const Edge& edge = g.edge(e);
      int x = edge.other(v);
      if (phi[x] < 0) continue;
      int t = ((phi[edge.w] - phi[edge.u]) % p + p) % p;
      if (!(edge.sign == Sign::Positive ? positive_ok[t] : negative_ok[t])) return false;
    }
    return true;
  };

  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == n) return true;
    if (!clock.tick()) return false;
    int v = order[i];
    if (forest.parent[v] < 0) {
      phi[v] = 0;
      if (consistent(v) && place(i + 1)) return true;
      phi[v] = -1;
      return false;
    }
    for (int value = 0; value < p; ++value) {
      phi[v] = value;
      if (consistent(v) && place(i + 1)) return true;
      if (clock.exhausted()) break;
    }
    phi[v] = -1;
    return false;
  };

  bool found = place(0);
  if (exhausted) *exhausted = clock.exhausted();
  if (!found) return std::nullopt;
  return phi;
}

IndexResult circular_chromatic_number(const SignedGraph& g, const SearchBudget& budget) {
  IndexResult result;
  const int bound = std::max(2, budget.max_p.value_or(4 * g.vertex_count()));
  result.max_p_used = bound;
  BudgetClock clock(budget);
  bool saw_unknown = false;
  for (auto [p, q] : index_candidates(bound)) {
    clock.reset_nodes();
    bool exhausted = false;
    auto phi = find_pq_tension(g, p, q, clock, &exhausted);
    result.nodes += clock.nodes();
    if (phi) {
      result.p = p;
      result.q = q;
      result.value = Rational(p, q);
      result.potentials = std::move(phi);
      if (saw_unknown) {
        result.kind = IndexKind::Unknown;
        result.has_upper_bound = true;
        result.note = "search budget exhausted below this value; it is an upper bound";
      } else {
        result.kind = IndexKind::Finite;
        result.note = "candidate numerators up to " + std::to_string(bound);
      }
      return result;
    }
    if (exhausted) {
      saw_unknown = true;
      if (clock.out_of_time()) break;
    }
  }
  result.kind = IndexKind::Unknown;
  result.note = saw_unknown ? "search budget exhausted"
                            : "no tension with numerator at most " + std::to_string(bound);
  return result;
}

}  // namespace monoflow
