#pragma once

// Canonical forms of small signed multigraphs and exhaustive generation of
// connected ones up to isomorphism.

#include <functional>
#include <string>
#include <vector>

#include "monoflow/graph.hpp"

namespace monoflow {

/// A string equal for two graphs iff they are isomorphic as signed
/// multigraphs (signs must match, no switching). Vertices are refined by
/// (degree, positive degree) and permuted within classes. Refuses
/// (BudgetExceeded) above 10 vertices.
std::string canonical_form(const SignedGraph& g);

bool are_isomorphic(const SignedGraph& a, const SignedGraph& b);

/// Relabels g by its canonical ordering, edges sorted.
SignedGraph canonical_graph(const SignedGraph& g);

struct EnumerationBounds {
  int min_vertices = 1;
  int max_vertices = 4;
  int max_edges = 6;
  bool even_degrees = false;  // Eulerian graphs only
  int min_degree = 0;
};

/// Connected loopless multigraphs (all edges positive) within the bounds,
/// one per isomorphism class, in canonical form, ordered by (n, m, form).
std::vector<SignedGraph> connected_multigraphs(const EnumerationBounds& bounds);

enum class SignatureScope {
  All,        // every signature up to isomorphism
  Inversing,  // one representative per inversing class up to isomorphism
};

/// Signed versions of every graph from connected_multigraphs.
std::vector<SignedGraph> connected_signed_multigraphs(const EnumerationBounds& bounds,
                                                      SignatureScope scope = SignatureScope::All);

/// Rough count of edge multisets visited before deduplication; used to
/// refuse oversized searches up front.
double enumeration_estimate(const EnumerationBounds& bounds);

}  // namespace monoflow
