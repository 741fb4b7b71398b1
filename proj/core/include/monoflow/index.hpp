#pragma once

// Exact circular flow index: (p,q)-flow decision by backtracking over a
// finite candidate set, an enumeration oracle, the alternative deciders for
// the equivalent flow notions, and the circular chromatic number.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoflow/flow.hpp"
#include "monoflow/graph.hpp"
#include "monoflow/rational.hpp"

namespace monoflow {

enum class SearchStatus { Found, NotFound, Unknown };

std::string to_string(SearchStatus s);

struct SearchBudget {
  std::optional<int> max_p;            // candidate numerator bound; operation-specific default
  std::uint64_t node_limit = 0;        // per decision; 0 = unlimited
  double time_limit_seconds = 0.0;     // whole operation; 0 = unlimited
};

/// Shared node/time accounting for one search. Cheap to poll.
class BudgetClock {
 public:
  explicit BudgetClock(const SearchBudget& budget);

  /// Counts one node; returns false once a limit is reached.
  bool tick();
  bool exhausted() const { return exhausted_; }
  bool out_of_time() const { return out_of_time_; }
  /// Starts a new per-decision node count; a spent deadline stays spent.
  void reset_nodes() {
    nodes_ = 0;
    exhausted_ = out_of_time_;
  }
  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t total_nodes() const { return total_nodes_; }

 private:
  std::uint64_t node_limit_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
  std::uint64_t total_nodes_ = 0;
  bool exhausted_ = false;
  bool out_of_time_ = false;
};

struct FlowWitness {
  Orientation orientation;
  FlowAssignment flow;
};

struct PQDecision {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<FlowWitness> witness;  // PQ(p,q) on the reference orientation
  std::uint64_t nodes = 0;
};

/// Backtracking search for a (p,q)-flow. Components are solved
/// independently. Never reports NotFound after a budget cut.
PQDecision decide_pq_flow(const SignedGraph& g, int p, int q, const SearchBudget& budget = {});
PQDecision decide_pq_flow(const SignedGraph& g, int p, int q, BudgetClock& clock);

// ---- enumeration oracle ---------------------------------------------------------

/// Exhaustive enumeration of Z_p-valued vectors on the reference
/// orientation. Refuses (BudgetExceeded) unless |E| <= 8 or p <= 4.
std::optional<FlowWitness> oracle_pq_flow(const SignedGraph& g, int p, int q);

/// The largest q for which a modulo (p,q)-flow exists, or nothing if none
/// exists for q = 1. Same guard as oracle_pq_flow.
std::optional<int> oracle_max_q(const SignedGraph& g, int p);

// ---- deciders for the other equivalent notions ----------------------------------

/// Circular r-flow existence through the cut condition: every sign and
/// interval choice per edge on the reference orientation, each tested by a
/// bounded circulation. Returns the circulation values when found (these may
/// use the closed endpoint r on high negative edges).
std::optional<std::vector<Rational>> decide_circular_r_by_cuts(const SignedGraph& g, const Rational& r);

/// Circular modulo r-flow existence with values restricted to multiples of
/// 1/q (r = p/q), searched directly in exact rational arithmetic.
std::optional<FlowWitness> decide_circular_mod_r(const SignedGraph& g, int p, int q);

// ---- circular flow index ------------------------------------------------------------

/// Reduced fractions a/b >= 2 with a <= max_numerator, ascending; each
/// returned as (p, q) with p even (odd numerators doubled).
std::vector<std::pair<int, int>> index_candidates(int max_numerator);

enum class IndexKind { Finite, Infeasible, Unknown };

struct IndexResult {
  IndexKind kind = IndexKind::Unknown;
  Rational value{0};              // the index, or the best verified upper bound when Unknown
  bool has_upper_bound = false;   // meaningful when Unknown
  std::string note;               // reason for Infeasible / Unknown
  int p = 0;
  int q = 0;
  std::optional<FlowWitness> pq_witness;        // PQ(p,q)
  std::optional<FlowWitness> circular_witness;  // non-negative circular p/q-flow
  std::optional<TightCutReport> certificate;
  std::optional<std::vector<int>> potentials;   // circular_chromatic_number only
  int max_p_used = 0;
  bool bound_truncated = false;   // max_p below the sound default
  std::uint64_t nodes = 0;
};

IndexResult circular_flow_index(const SignedGraph& g, const SearchBudget& budget = {});

/// Circular chromatic number via potentials phi: V -> Z_p, rooted at 0 in
/// each component. Default candidate bound 4|V|; results carry the bound.
IndexResult circular_chromatic_number(const SignedGraph& g, const SearchBudget& budget = {});

/// Whether (G, sigma) has a circular p/q-tension; returns the potentials.
std::optional<std::vector<int>> find_pq_tension(const SignedGraph& g, int p, int q, BudgetClock& clock,
                                                bool* exhausted = nullptr);

}  // namespace monoflow
