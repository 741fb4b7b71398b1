#include "monoflow/flow.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "maxflow.hpp"
#include "monoflow/errors.hpp"

namespace monoflow {

// ---- kinds ------------------------------------------------------------------

namespace {

void check_pq(int p, int q) {
  if (p <= 0 || p % 2 != 0) throw PreconditionError("p must be a positive even integer, got " + std::to_string(p));
  if (q < 1 || 2 * q > p) throw PreconditionError("need 1 <= 2q <= p, got q = " + std::to_string(q));
}

void check_r(const Rational& r) {
  if (r < Rational(2)) throw PreconditionError("r must be at least 2, got " + to_string(r));
}

Rational abs_value(const Rational& x) { return x < Rational(0) ? -x : x; }

}  // namespace

FlowKindSpec FlowKindSpec::circular_r(Rational r) {
  check_r(r);
  return {FlowKind::CircularR, r, 0, 0};
}

FlowKindSpec FlowKindSpec::pq(int p, int q) {
  check_pq(p, q);
  return {FlowKind::PQ, Rational(p, q), p, q};
}

FlowKindSpec FlowKindSpec::mod_pq(int p, int q) {
  check_pq(p, q);
  return {FlowKind::ModPQ, Rational(p, q), p, q};
}

FlowKindSpec FlowKindSpec::circular_mod_r(Rational r) {
  check_r(r);
  return {FlowKind::CircularModR, r, 0, 0};
}

Rational FlowKindSpec::index() const { return r; }

std::string FlowKindSpec::name() const {
  switch (kind) {
    case FlowKind::CircularR:
      return "circular-r";
    case FlowKind::PQ:
      return "pq";
    case FlowKind::ModPQ:
      return "mod-pq";
    case FlowKind::CircularModR:
      return "circular-mod-r";
  }
  return "?";
}

// ---- boundary and verification ----------------------------------------------

Rational boundary(const SignedGraph& g, const Orientation& d, const std::vector<Rational>& values,
                  const std::vector<bool>& in_x) {
  Rational total(0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Arc& a = d.arc(e);
    if (in_x[a.tail] && !in_x[a.head]) total += values[e];
    if (!in_x[a.tail] && in_x[a.head]) total -= values[e];
  }
  return total;
}

Rational vertex_boundary(const SignedGraph& g, const Orientation& d, const std::vector<Rational>& values, int v) {
  Rational total(0);
  for (int e : g.incident(v)) {
    if (d.arc(e).tail == v) {
      total += values[e];
    } else {
      total -= values[e];
    }
  }
  return total;
}

bool value_admissible(const FlowKindSpec& kind, Sign s, const Rational& value) {
  const Rational one(1);
  switch (kind.kind) {
    case FlowKind::CircularR: {
      Rational r = kind.r;
      Rational a = abs_value(value);
      if (s == Sign::Positive) return a >= one && a <= r - one;
      return (a <= r / 2 - one) || (a >= r / 2 + one && a < r);
    }
    case FlowKind::PQ: {
      if (value.denominator() != 1) return false;
      std::int64_t a = std::abs(value.numerator());
      std::int64_t p = kind.p;
      std::int64_t q = kind.q;
      if (s == Sign::Positive) return a >= q && a <= p - q;
      return a <= p / 2 - q || (a >= p / 2 + q && a <= p - 1);
    }
    case FlowKind::ModPQ: {
      if (value.denominator() != 1) return false;
      std::int64_t v = value.numerator();
      std::int64_t p = kind.p;
      std::int64_t q = kind.q;
      if (v < 0 || v >= p) return false;
      if (s == Sign::Positive) return v >= q && v <= p - q;
      return v <= p / 2 - q || v >= p / 2 + q;
    }
    case FlowKind::CircularModR: {
      Rational r = kind.r;
      if (value < Rational(0) || value >= r) return false;
      if (s == Sign::Positive) return value >= one && value <= r - one;
      return value <= r / 2 - one || value >= r / 2 + one;
    }
  }
  return false;
}

FlowVerdict verify_flow(const SignedGraph& g, const Orientation& d, const FlowAssignment& f) {
  if (static_cast<int>(f.values.size()) != g.edge_count() || d.edge_count() != g.edge_count()) {
    throw PreconditionError("flow does not cover every edge");
  }
  if (f.kind.is_integral()) check_pq(f.kind.p, f.kind.q);
  else check_r(f.kind.r);

  FlowVerdict verdict;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!value_admissible(f.kind, g.sign(e), f.values[e])) {
      verdict.ok = false;
      verdict.edge = e;
      verdict.reason = "edge " + std::to_string(e) + " value " + to_string(f.values[e]) + " out of range for " +
                       (g.is_positive(e) ? "positive" : "negative") + " edge";
      return verdict;
    }
  }
  Rational modulus = f.kind.kind == FlowKind::ModPQ ? Rational(f.kind.p) : f.kind.r;
  for (int v = 0; v < g.vertex_count(); ++v) {
    Rational b = vertex_boundary(g, d, f.values, v);
    bool balanced = f.kind.is_modular() ? mod_positive(b, modulus) == Rational(0) : b == Rational(0);
    if (!balanced) {
      verdict.ok = false;
      verdict.vertex = v;
      verdict.reason = "vertex " + std::to_string(v) + " has boundary " + to_string(b);
      return verdict;
    }
  }
  return verdict;
}

void negate_edge(Orientation& d, FlowAssignment& f, int e) {
  if (f.kind.is_modular()) throw PreconditionError("negate_edge applies to signed flow kinds only");
  d.flip(e);
  f.values.at(e) = -f.values.at(e);
}

void make_nonnegative(Orientation& d, FlowAssignment& f) {
  for (int e = 0; e < static_cast<int>(f.values.size()); ++e) {
    if (f.values[e] < Rational(0)) negate_edge(d, f, e);
  }
}

void orient_zero_edges(const SignedGraph& g, Orientation& d, const FlowAssignment& f) {
  for (int e = 0; e < g.edge_count(); ++e) {
    if (f.values[e] == Rational(0) && d.arc(e).tail > d.arc(e).head) d.flip(e);
  }
}

FlowAssignment pq_to_circular(const FlowAssignment& f) {
  if (f.kind.kind != FlowKind::PQ) throw PreconditionError("pq_to_circular expects a (p,q)-flow");
  FlowAssignment out{FlowKindSpec::circular_r(Rational(f.kind.p, f.kind.q)), {}};
  for (const Rational& v : f.values) out.values.push_back(v / f.kind.q);
  return out;
}

FlowAssignment scale_circular(const FlowAssignment& f, const Rational& new_r) {
  if (f.kind.kind != FlowKind::CircularR) throw PreconditionError("scale_circular expects a circular r-flow");
  if (new_r < f.kind.r) throw PreconditionError("scaling target must not be below r");
  FlowAssignment out{FlowKindSpec::circular_r(new_r), {}};
  Rational factor = new_r / f.kind.r;
  for (const Rational& v : f.values) out.values.push_back(v * factor);
  return out;
}

FlowAssignment pq_to_mod(const FlowAssignment& f) {
  if (f.kind.kind != FlowKind::PQ) throw PreconditionError("pq_to_mod expects a (p,q)-flow");
  FlowAssignment out{FlowKindSpec::mod_pq(f.kind.p, f.kind.q), {}};
  for (const Rational& v : f.values) out.values.push_back(mod_positive(v, Rational(f.kind.p)));
  return out;
}

FlowAssignment modulo_to_integer(const SignedGraph& g, const Orientation& d, const FlowAssignment& f) {
  if (f.kind.kind != FlowKind::ModPQ) throw PreconditionError("modulo_to_integer expects a modulo (p,q)-flow");
  if (FlowVerdict v = verify_flow(g, d, f); !v) throw PreconditionError("invalid modulo flow: " + v.reason);

  const std::int64_t p = f.kind.p;
  const int n = g.vertex_count();
  std::vector<std::int64_t> value(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) value[e] = f.values[e].numerator();
  std::vector<std::int64_t> excess(n, 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    excess[d.arc(e).tail] += value[e];
    excess[d.arc(e).head] -= value[e];
  }

  // Moving from a to its neighbour along edge e lowers excess[a] by p.
  auto movable = [&](int a, int e) {
    return d.arc(e).tail == a ? value[e] > 0 : value[e] < 0;
  };

  for (int x = 0; x < n; ++x) {
    while (excess[x] > 0) {
      std::vector<int> via(n, -1);
      std::vector<bool> seen(n, false);
      std::queue<int> queue;
      queue.push(x);
      seen[x] = true;
      int target = -1;
      while (!queue.empty() && target < 0) {
        int a = queue.front();
        queue.pop();
        for (int e : g.incident(a)) {
          int c = g.edge(e).other(a);
          if (seen[c] || !movable(a, e)) continue;
          seen[c] = true;
          via[c] = e;
          if (excess[c] < 0) {
            target = c;
            break;
          }
          queue.push(c);
        }
      }
      if (target < 0) throw Error("modulo_to_integer: no rerouting path (input boundary not divisible by p?)");
      for (int c = target; c != x;) {
        int e = via[c];
        int a = g.edge(e).other(c);
        value[e] += d.arc(e).tail == a ? -p : p;
        c = a;
      }
      excess[x] -= p;
      excess[target] += p;
    }
  }

  FlowAssignment out{FlowKindSpec::pq(f.kind.p, f.kind.q), {}};
  for (std::int64_t v : value) out.values.emplace_back(v);
  return out;
}

// ---- cut condition ------------------------------------------------------------

std::vector<EdgeBounds> hoffman_bounds(const SignedGraph& g, const NegativePartition& pi, const Rational& r) {
  check_r(r);
  std::vector<int> role(g.edge_count(), 0);  // 0 positive, 1 low, 2 high
  for (int e : pi.low_set) role.at(e) = 1;
  for (int e : pi.high_set) {
    if (role.at(e) != 0) throw PreconditionError("edge " + std::to_string(e) + " is in both partition sets");
    role[e] = 2;
  }
  std::vector<EdgeBounds> bounds(g.edge_count());
  const Rational one(1);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_positive(e)) {
      if (role[e] != 0) throw PreconditionError("positive edge " + std::to_string(e) + " in negative partition");
      bounds[e] = {one, r - one};
    } else if (role[e] == 1) {
      bounds[e] = {Rational(0), r / 2 - one};
    } else if (role[e] == 2) {
      bounds[e] = {r / 2 + one, r};
    } else {
      throw PreconditionError("negative edge " + std::to_string(e) + " missing from partition");
    }
  }
  return bounds;
}

std::optional<std::vector<Rational>> bounded_circulation(const SignedGraph& g, const Orientation& d,
                                                         const std::vector<EdgeBounds>& bounds) {
  std::int64_t scale = 1;
  for (const EdgeBounds& b : bounds) {
    if (b.lower > b.upper) return std::nullopt;
    scale = std::lcm(scale, b.lower.denominator());
    scale = std::lcm(scale, b.upper.denominator());
  }
  const int n = g.vertex_count();
  const int source = n;
  const int sink = n + 1;
  detail::MaxFlow net(n + 2);
  std::vector<std::int64_t> demand(n, 0);
  std::vector<std::int64_t> lower(g.edge_count());
  std::vector<int> arc_id(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    std::int64_t lo = (bounds[e].lower * scale).numerator();
    std::int64_t hi = (bounds[e].upper * scale).numerator();
    lower[e] = lo;
    const Arc& a = d.arc(e);
    arc_id[e] = net.add_arc(a.tail, a.head, hi - lo);
    demand[a.head] += lo;
    demand[a.tail] -= lo;
  }
  std::int64_t required = 0;
  for (int v = 0; v < n; ++v) {
    if (demand[v] > 0) {
      net.add_arc(source, v, demand[v]);
      required += demand[v];
    } else if (demand[v] < 0) {
      net.add_arc(v, sink, -demand[v]);
    }
  }
  if (net.run(source, sink) != required) return std::nullopt;
  std::vector<Rational> values(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) values[e] = Rational(lower[e] + net.flow_on(arc_id[e]), scale);
  return values;
}

bool hoffman_feasible(const SignedGraph& g, const Orientation& d, const NegativePartition& pi, const Rational& r) {
  return bounded_circulation(g, d, hoffman_bounds(g, pi, r)).has_value();
}

bool hoffman_feasible_by_cuts(const SignedGraph& g, const Orientation& d, const NegativePartition& pi,
                              const Rational& r) {
  const int n = g.vertex_count();
  if (n > 16) throw BudgetExceeded("cut enumeration is limited to 16 vertices");
  const std::vector<EdgeBounds> bounds = hoffman_bounds(g, pi, r);
  for (const EdgeBounds& b : bounds) {
    if (b.lower > b.upper) return false;
  }
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    Rational entering(0);
    Rational leaving(0);
    for (int e = 0; e < g.edge_count(); ++e) {
      const bool tail_in = (mask >> d.arc(e).tail) & 1u;
      const bool head_in = (mask >> d.arc(e).head) & 1u;
      if (!tail_in && head_in) entering += bounds[e].lower;
      if (tail_in && !head_in) leaving += bounds[e].upper;
    }
    if (entering > leaving) return false;
  }
  return true;
}

// ---- tight cuts -----------------------------------------------------------------

Rational tight_cut_index(int s1, int s2, int t1, int t2) {
  int den = 2 * s1 + t1 - t2;
  if (den <= 0) throw PreconditionError("tight cut does not determine an index (2 s1 + t1 - t2 <= 0)");
  return Rational(2 * (s1 + s2 + t1 + t2), den);
}

Rational tight_cut_index(const TightCutReport& report) {
  return tight_cut_index(report.s1, report.s2, report.t1, report.t2);
}

std::optional<TightCutReport> find_tight_cut(const SignedGraph& g, const Orientation& d, const FlowAssignment& f) {
  if (f.kind.kind != FlowKind::CircularR) throw PreconditionError("find_tight_cut expects a circular r-flow");
  const Rational r = f.kind.r;
  const Rational one(1);
  for (const Rational& v : f.values) {
    if (v < Rational(0)) throw PreconditionError("find_tight_cut expects a non-negative flow");
  }
  // Value an edge must take when leaving / entering a tight X.
  auto leaving_value = [&](int e) { return g.is_positive(e) ? r - one : r / 2 - one; };
  auto entering_value = [&](int e) { return g.is_positive(e) ? one : r / 2 + one; };

  const int n = g.vertex_count();
  std::optional<std::vector<int>> best;
  for (int start = 0; start < n; ++start) {
    std::vector<bool> in_x(n, false);
    std::vector<int> stack{start};
    in_x[start] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int e : g.incident(x)) {
        int y = g.edge(e).other(x);
        if (in_x[y]) continue;
        bool forward = d.arc(e).tail == x;
        bool slack = forward ? f.values[e] != leaving_value(e) : f.values[e] != entering_value(e);
        if (slack) {
          in_x[y] = true;
          stack.push_back(y);
        }
      }
    }
    auto size = std::count(in_x.begin(), in_x.end(), true);
    if (size == n) continue;
    bool crossing = false;
    for (const Edge& e : g.edges()) crossing = crossing || (in_x[e.u] != in_x[e.w]);
    if (!crossing) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (in_x[v]) members.push_back(v);
    }
    if (!best || members < *best) best = members;
  }
  if (!best) return std::nullopt;

  std::vector<bool> side(n, false);
  for (int v : *best) side[v] = true;
  TightCutReport report{make_cut(g, side), 0, 0, 0, 0, Rational(0)};
  for (int e : report.cut.edge_ids) {
    bool leaving = side[d.arc(e).tail];
    if (g.is_positive(e)) {
      (leaving ? report.s1 : report.s2) += 1;
    } else {
      (leaving ? report.t1 : report.t2) += 1;
    }
  }
  int den = 2 * report.s1 + report.t1 - report.t2;
  if (den > 0) report.implied_r = tight_cut_index(report);
  return report;
}

}  // namespace monoflow
