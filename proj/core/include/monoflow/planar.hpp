#pragma once

// Plane embeddings given as face boundary walks, the signed dual, the flow
// index / chromatic number duality check, homomorphisms to negative cycles,
// negative girth and the bipartite folding step.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monoflow/graph.hpp"
#include "monoflow/index.hpp"

namespace monoflow {

// ---- embeddings ------------------------------------------------------------------

/// One side of an edge on a face walk. Not reversed means the walk runs
/// from the edge's first listed endpoint to its second.
struct FaceSlot {
  int edge = 0;
  bool reversed = false;

  friend bool operator==(const FaceSlot&, const FaceSlot&) = default;
};

struct PlaneEmbedding {
  std::vector<std::vector<FaceSlot>> faces;

  int face_count() const { return static_cast<int>(faces.size()); }
  friend bool operator==(const PlaneEmbedding&, const PlaneEmbedding&) = default;
};

struct EmbeddingVerdict {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Every edge appears on exactly two face slots, once in each direction;
/// every face is a non-empty closed walk; n - m + f = 2 on every component
/// that has edges.
EmbeddingVerdict validate_embedding(const SignedGraph& g, const PlaneEmbedding& emb);

/// Faces of the rotation system in which rotation[v] lists the edges at v
/// in counter-clockwise order. Throws PreconditionError when a rotation
/// does not list exactly the edges incident to v.
PlaneEmbedding embedding_from_rotation(const SignedGraph& g, const std::vector<std::vector<int>>& rotation);

/// Counter-clockwise rotation recovered from the faces.
std::vector<std::vector<int>> rotation_of(const SignedGraph& g, const PlaneEmbedding& emb);

/// Vertices along a face walk, starting at the tail of its first slot.
std::vector<int> face_vertices(const SignedGraph& g, const std::vector<FaceSlot>& face);
Sign face_sign(const SignedGraph& g, const std::vector<FaceSlot>& face);

/// "f <edge_id>[~] ..." lines, '#' comments. Edge ids are not checked
/// against a graph here.
PlaneEmbedding parse_embedding(std::string_view text);
std::string format_embedding(const PlaneEmbedding& emb);

// ---- dual ------------------------------------------------------------------------

struct PlaneGraph {
  SignedGraph graph;
  PlaneEmbedding embedding;
};

/// One vertex per face, dual edge e joins the faces on the two sides of e
/// and keeps its sign. Dual faces follow the primal rotations. Throws
/// PreconditionError on an invalid embedding, a disconnected graph, an
/// edgeless graph, or a bridge (whose dual would be a loop).
PlaneGraph dual(const SignedGraph& g, const PlaneEmbedding& emb);

struct DualityReport {
  IndexResult flow_index;      // of g
  IndexResult chromatic;       // of the dual
  std::optional<bool> equal;   // nothing when either side is Unknown
};

/// Phi_c(g) against chi_c(dual). The chromatic search uses candidate
/// numerators up to max(4|V*|, 2|E|) unless the budget sets max_p.
DualityReport check_duality(const SignedGraph& g, const PlaneEmbedding& emb, const SearchBudget& budget = {});

// ---- homomorphisms to negative cycles --------------------------------------------------

/// The target C_{-k}: vertices 0..k-1, edge i joins i and i+1 (mod k) and
/// is positive except edge k-1, which is negative. With negated_target all
/// signs are flipped (-C_{-k}).
SignedGraph negative_cycle_target(int k, bool negated_target = false);

struct HomomorphismMapping {
  int target_length = 2;
  bool negated_target = false;
  std::vector<int> vertex_image;
  std::vector<int> edge_image;           // target edge id per source edge
  std::vector<bool> switching_set;       // per source vertex
};

/// Endpoints map onto the image edge and, after switching, signs agree.
bool verify_homomorphism(const SignedGraph& g, const HomomorphismMapping& h);

struct HomomorphismSearch {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<HomomorphismMapping> mapping;
};

/// Backtracking over vertex images and switching bits in BFS order, one
/// component at a time (the root is unswitched and mapped to 0).
HomomorphismSearch hom_to_negative_cycle(const SignedGraph& g, int k, bool negated_target = false,
                                         const SearchBudget& budget = {});

struct HomPartition {
  std::vector<std::vector<int>> parts;  // preimages of the edges of -C_{-k}
  Orientation orientation;              // induced by the direction i -> i+1
};

/// The partition and orientation a mapping induces. A mapping onto C_{-k}
/// with k even is first re-switched onto -C_{-k}. Throws PreconditionError
/// for an unverified mapping or for odd k with a non-negated target.
HomPartition partition_from_homomorphism(const SignedGraph& g, const HomomorphismMapping& h);

/// (i) each part is the positive set of a signature switching-equivalent to
/// g; (ii) on every fundamental cycle the forward-minus-backward count of
/// each part is the same. Throws PreconditionError when the parts do not
/// partition E(g).
bool verify_hom_partition(const SignedGraph& g, const std::vector<std::vector<int>>& parts, const Orientation& d);

// ---- negative girth and folding ----------------------------------------------------------

/// Length of a shortest negative cycle; nothing when g is balanced.
std::optional<int> negative_girth(const SignedGraph& g);

/// The face walk is a negative closed walk of length exactly `length`.
bool is_negative_face_of_length(const SignedGraph& g, const std::vector<FaceSlot>& face, int length);

struct FoldStep {
  PlaneGraph result;
  int face = -1;
  int identified_from = -1;  // v_{i+1}, removed
  int identified_to = -1;    // v_{i-1}, kept (indices of the input graph)
  bool switched = false;
  std::vector<int> merged_edges;  // input edges merged into a parallel twin
};

/// Identifies v_{i-1} and v_{i+1} for the first consecutive triple on the
/// face that keeps the graph bipartite, plane and of the same negative
/// girth, switching at v_{i+1} when the two edges differ in sign. Parallel
/// edges of equal sign that now bound a digon face are merged. Throws
/// PreconditionError for a non-bipartite or balanced graph, an invalid
/// embedding, or a face that is already a negative cycle of length equal
/// to the negative girth; throws Error when no triple works.
FoldStep fold_once(const SignedGraph& g, const PlaneEmbedding& emb, int face_index);

/// Folds the lowest-index face that is not a negative cycle of length
/// equal to the negative girth until none is left.
PlaneGraph fold_to_saturation(const SignedGraph& g, const PlaneEmbedding& emb, std::vector<FoldStep>* steps = nullptr);

// ---- plane corpus ------------------------------------------------------------------------

struct NamedPlaneGraph {
  std::string name;
  PlaneGraph plane;
};

namespace plane {
PlaneGraph cycle(int length, int negative_edges);           // first edges negative
PlaneGraph parallel(int count, int negative_edges);         // kK_2, first edges negative
/// Three internally disjoint paths with a, b, c edges between vertices 0 and 1.
PlaneGraph theta(int a, int b, int c, const std::vector<int>& negative_edges = {});
/// Hub 0 and rim 1..n; spokes are edges 0..n-1, rim edges n..2n-1.
PlaneGraph wheel(int n, const std::vector<int>& negative_edges = {});
PlaneGraph k4(const std::vector<int>& negative_edges = {});
/// T_2(K_4) with the embedding inherited from K_4.
PlaneGraph t2_k4();
/// A grid of rows x cols unit squares; bipartite.
PlaneGraph grid(int rows, int cols, const std::vector<int>& negative_edges = {});
}  // namespace plane

/// Digons, theta graphs, wheels W_3..W_5 with several signatures, T_2(K_4).
std::vector<NamedPlaneGraph> duality_corpus();

/// Plane bipartite signed graphs with finite negative girth.
std::vector<NamedPlaneGraph> folding_corpus();

}  // namespace monoflow
