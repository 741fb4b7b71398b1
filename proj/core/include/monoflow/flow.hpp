#pragma once

// Flow assignments of the four kinds (circular r, integer (p,q), modulo
// (p,q), circular modulo r), their verification, the cut-condition test for
// a fixed orientation and negative-edge partition, and tight cuts.

#include <optional>
#include <string>
#include <vector>

#include "monoflow/graph.hpp"
#include "monoflow/rational.hpp"

namespace monoflow {

enum class FlowKind { CircularR, PQ, ModPQ, CircularModR };

struct FlowKindSpec {
  FlowKind kind = FlowKind::CircularR;
  Rational r{2};  // CircularR / CircularModR; p/q for the integer kinds
  int p = 0;
  int q = 0;

  static FlowKindSpec circular_r(Rational r);
  static FlowKindSpec pq(int p, int q);
  static FlowKindSpec mod_pq(int p, int q);
  static FlowKindSpec circular_mod_r(Rational r);

  /// The flow index the kind stands for (r, or p/q).
  Rational index() const;
  bool is_modular() const { return kind == FlowKind::ModPQ || kind == FlowKind::CircularModR; }
  bool is_integral() const { return kind == FlowKind::PQ || kind == FlowKind::ModPQ; }
  /// "circular-r", "pq", "mod-pq" or "circular-mod-r".
  std::string name() const;

  friend bool operator==(const FlowKindSpec&, const FlowKindSpec&) = default;
};

/// Values are read along the arcs of an accompanying Orientation.
struct FlowAssignment {
  FlowKindSpec kind;
  std::vector<Rational> values;

  friend bool operator==(const FlowAssignment&, const FlowAssignment&) = default;
};

struct FlowVerdict {
  bool ok = true;
  int edge = -1;    // first edge with a value out of range
  int vertex = -1;  // first vertex violating balance
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Sum over arcs leaving X minus sum over arcs entering X.
Rational boundary(const SignedGraph& g, const Orientation& d, const std::vector<Rational>& values,
                  const std::vector<bool>& in_x);
Rational vertex_boundary(const SignedGraph& g, const Orientation& d, const std::vector<Rational>& values, int v);

/// Whether `value` is admissible on an edge of sign `s` for the kind. The
/// signed kinds (CircularR, PQ) test |value|; the modular kinds test the
/// residue itself and require 0 <= value < modulus.
bool value_admissible(const FlowKindSpec& kind, Sign s, const Rational& value);

/// Range and balance check. Throws PreconditionError when `f` does not
/// cover every edge or the kind's parameters are invalid.
FlowVerdict verify_flow(const SignedGraph& g, const Orientation& d, const FlowAssignment& f);

/// Reverses edge e and negates its value (signed kinds only).
void negate_edge(Orientation& d, FlowAssignment& f, int e);
/// Applies negate_edge to every edge with a negative value.
void make_nonnegative(Orientation& d, FlowAssignment& f);
/// Reorients zero-valued edges from the lower to the higher vertex index.
void orient_zero_edges(const SignedGraph& g, Orientation& d, const FlowAssignment& f);

/// An integer (p,q)-flow read as a circular p/q-flow (values divided by q).
FlowAssignment pq_to_circular(const FlowAssignment& f);
/// A circular r-flow scaled to a circular r'-flow, r' >= r.
FlowAssignment scale_circular(const FlowAssignment& f, const Rational& new_r);
/// A (p,q)-flow reduced modulo p to a modulo (p,q)-flow.
FlowAssignment pq_to_mod(const FlowAssignment& f);

/// Tutte's lemma, constructively: turns a modulo (p,q)-flow into an integer
/// (p,q)-flow on the same orientation with congruent values. Excess is
/// rerouted in steps of p along shortest paths from positive-boundary to
/// negative-boundary vertices.
FlowAssignment modulo_to_integer(const SignedGraph& g, const Orientation& d, const FlowAssignment& f);

// ---- cut condition ----------------------------------------------------------

/// A split of E^- into edges carrying low values and edges carrying high values.
struct NegativePartition {
  std::vector<int> low_set;
  std::vector<int> high_set;
};

struct EdgeBounds {
  Rational lower;
  Rational upper;
};

/// s(e), t(e) per edge for the given partition and r.
std::vector<EdgeBounds> hoffman_bounds(const SignedGraph& g, const NegativePartition& pi, const Rational& r);

/// Circulation feasibility with lower bounds s and upper bounds t along D,
/// by one max-flow computation.
bool hoffman_feasible(const SignedGraph& g, const Orientation& d, const NegativePartition& pi, const Rational& r);

/// The same test by checking the cut condition on every vertex subset X:
/// lower bounds entering X never exceed upper bounds leaving X. Refuses
/// (BudgetExceeded) above 16 vertices.
bool hoffman_feasible_by_cuts(const SignedGraph& g, const Orientation& d, const NegativePartition& pi,
                              const Rational& r);

/// Same test for arbitrary per-edge bounds along D; returns a feasible
/// circulation (exact, rational) or nothing. Bounds may be negative.
std::optional<std::vector<Rational>> bounded_circulation(const SignedGraph& g, const Orientation& d,
                                                         const std::vector<EdgeBounds>& bounds);

// ---- tight cuts -------------------------------------------------------------

struct TightCutReport {
  Cut cut;
  int s1 = 0;  // positive arcs leaving X at r - 1
  int s2 = 0;  // positive arcs entering X at 1
  int t1 = 0;  // negative arcs leaving X at r/2 - 1
  int t2 = 0;  // negative arcs entering X at r/2 + 1
  Rational implied_r{0};
};

/// A tight cut for a non-negative circular r-flow, found by reachability
/// along arcs that still have slack. Among all tight cuts found this way
/// the lexicographically smallest vertex set is returned.
std::optional<TightCutReport> find_tight_cut(const SignedGraph& g, const Orientation& d, const FlowAssignment& f);

/// 2(s1+s2+t1+t2) / (2 s1 + t1 - t2). Throws PreconditionError when the
/// denominator is not positive.
Rational tight_cut_index(int s1, int s2, int t1, int t2);
Rational tight_cut_index(const TightCutReport& report);

}  // namespace monoflow
