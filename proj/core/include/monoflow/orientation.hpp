#pragma once

// Modulo l-orientations and their edge-partition form, the four equivalent
// certificates on Eulerian signed graphs, orientations with prescribed
// boundary modulo 2k, the flow <-> multigraph orientation transfer, and a
// brute-force group connectivity test.

#include <optional>
#include <string>
#include <vector>

#include "monoflow/flow.hpp"
#include "monoflow/graph.hpp"
#include "monoflow/index.hpp"

namespace monoflow {

// ---- boundaries --------------------------------------------------------------

/// A vertex function into Z_m. Residues are stored in 0..m-1; symmetric()
/// gives the representative in (-m/2, m/2].
class BoundaryFunction {
 public:
  BoundaryFunction() = default;
  BoundaryFunction(int modulus, std::vector<int> residues);

  int modulus() const { return modulus_; }
  int vertex_count() const { return static_cast<int>(residues_.size()); }
  int residue(int v) const { return residues_.at(static_cast<std::size_t>(v)); }
  int symmetric(int v) const;
  const std::vector<int>& residues() const { return residues_; }
  /// beta(A) in the symmetric range.
  int symmetric_sum(const std::vector<bool>& in_a) const;

  bool sums_to_zero() const;
  /// sums_to_zero() and beta(v) = d(v) (mod 2) at every vertex. Fills
  /// `bad_vertex` with the first parity violation, or -1.
  bool is_parity_compliant(const SignedGraph& g, int* bad_vertex = nullptr) const;

  friend bool operator==(const BoundaryFunction&, const BoundaryFunction&) = default;

 private:
  int modulus_ = 1;
  std::vector<int> residues_;
};

/// beta(v) = c * d+(v) mod m, the boundary used by the Eulerian lemma and
/// the flow transfer.
BoundaryFunction positive_degree_boundary(const SignedGraph& g, int c, int modulus);

/// Out-degree minus in-degree of D, reduced modulo m.
BoundaryFunction boundary_of(const SignedGraph& g, const Orientation& d, int modulus);

// ---- modulo l-orientations -----------------------------------------------------

struct ModOrientationCertificate {
  SignedGraph signature_used;
  Orientation orientation;
  int ell = 2;
};

/// (l-1)(out+ - in+) - (out- - in-) at v, with signs taken from `signs`.
int mod_orientation_defect(const SignedGraph& signs, const Orientation& d, int ell, int v);

/// Throws PreconditionError when the certificate's graph is not a
/// re-signing of `original`.
bool verify_mod_orientation(const ModOrientationCertificate& cert, const SignedGraph& original);

struct ModOrientationSearch {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<ModOrientationCertificate> certificate;
};

/// Joint search over inversing-equivalent signatures and orientations.
/// Odd l needs the all-positive class, even l needs even degrees; both are
/// checked before searching.
ModOrientationSearch find_mod_orientation(const SignedGraph& g, int ell, const SearchBudget& budget = {});

// ---- partition form --------------------------------------------------------------

struct PartitionCertificate {
  std::vector<std::vector<int>> parts;
  Orientation orientation;
};

struct PartitionVerdict {
  bool ok = true;
  int part = -1;
  int vertex = -1;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Each part is the positive set of a signature inversing-equivalent to
/// `original`, and all parts have equal imbalance at every vertex under the
/// certificate's orientation. Throws PreconditionError when the parts do
/// not partition the edge set.
PartitionVerdict verify_partition_certificate(const PartitionCertificate& pc, const SignedGraph& original);

/// Lifts same-sign in/out pairs (ascending edge id), splits vertices into
/// an l-regular bipartite digraph, colours it into perfect matchings and
/// pulls the colour classes back. Throws PreconditionError on an invalid
/// certificate.
PartitionCertificate orientation_to_partition(const ModOrientationCertificate& cert);

/// The converse: a modulo l-orientation relative to the signature whose
/// positive set is the first part.
ModOrientationCertificate partition_to_orientation(const PartitionCertificate& pc, const SignedGraph& original);

// ---- Eulerian forms ----------------------------------------------------------------

enum class EulerianForm { Flow4k, SpecialModFlow, BoundaryOrientation, Mod2kOrientation };

std::string to_string(EulerianForm form);

/// Payload per form:
///   Flow4k              orientation + integer (4k, 2k-1)-flow
///   SpecialModFlow      orientation + residues mod 4k, positive edges in
///                       {2k-1, 2k+1}, negative edges in {1, 4k-1}
///   BoundaryOrientation orientation with out - in = 2k d+ (mod 4k)
///   Mod2kOrientation    orientation + signature (modulo 2k-orientation)
struct EulerianCertificate {
  EulerianForm form = EulerianForm::Flow4k;
  int k = 1;
  Orientation orientation;
  std::vector<Rational> values;               // Flow4k, SpecialModFlow
  std::optional<SignedGraph> signature_used;  // Mod2kOrientation
};

bool verify_eulerian_certificate(const EulerianCertificate& cert, const SignedGraph& g);

/// Independent search for a certificate of one form.
std::optional<EulerianCertificate> find_eulerian_certificate(const SignedGraph& g, EulerianForm form, int k,
                                                             const SearchBudget& budget = {});

/// Walks the cycle Flow4k -> SpecialModFlow -> BoundaryOrientation ->
/// Mod2kOrientation -> Flow4k until `target` is reached. Throws
/// PreconditionError when g has an odd-degree vertex or `cert` does not
/// verify.
EulerianCertificate convert_eulerian_certificate(const EulerianCertificate& cert, EulerianForm target,
                                                 const SignedGraph& g);

// ---- (Z_2k, beta)-orientations --------------------------------------------------------

/// Throws PreconditionError naming the vertex when beta is not a
/// parity-compliant boundary of g, or when its modulus is odd.
bool verify_beta_orientation(const SignedGraph& g, const Orientation& d, const BoundaryFunction& beta);

struct FlippedArc {
  Orientation orientation;
  BoundaryFunction beta;
};

/// Reverses edge e; beta drops by 2 at the old tail and rises by 2 at the
/// old head.
FlippedArc flip_arc(const SignedGraph& g, const Orientation& d, const BoundaryFunction& beta, int e);

struct BetaOrientationSearch {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Orientation> orientation;
};

/// Depth-first completion of `partial` (one optional arc per edge) with
/// pruning on the residues still reachable at each vertex.
BetaOrientationSearch find_beta_orientation(const SignedGraph& g, const BoundaryFunction& beta,
                                            const std::vector<std::optional<Arc>>& partial = {},
                                            const SearchBudget& budget = {});

// ---- flow <-> orientation transfer ------------------------------------------------------

struct TransferOrientation {
  MultipliedGraph multigraph;  // (2p - 2q) copies of every edge, all positive
  Orientation orientation;
  BoundaryFunction beta;       // 2p d+ mod 4p
};

/// A (2p, q)-flow on g as a (Z_4p, beta)-orientation of (2p-2q)G.
TransferOrientation flow_to_orientation(const SignedGraph& g, int p, int q, const FlowWitness& flow);

/// A (Z_4p, beta)-orientation of (2p-2q)G (ids as in multiply_edges) as a
/// (2p, q)-flow on the reference orientation of g.
FlowWitness orientation_to_flow(const SignedGraph& g, int p, int q, const Orientation& multi);

// ---- group connectivity ----------------------------------------------------------------

/// Whether every Z_k-boundary is the boundary of a nowhere-zero Z_k-valued
/// function. Refuses (BudgetExceeded) beyond 5 vertices or 10 edges.
bool zk_connected(const SignedGraph& g, int k, const SearchBudget& budget = {});

/// The avoidance form: for every g: E -> Z_k a modulo k-flow f with
/// f(e) != g(e) on every edge exists. Exhaustive over g when k^|E| <= 10^6,
/// otherwise over `samples` random g. Same guard as zk_connected.
bool zk_connected_by_avoidance(const SignedGraph& g, int k, int samples = 2000, unsigned seed = 1);

}  // namespace monoflow
