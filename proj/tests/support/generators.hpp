#pragma once

#include <random>
#include <vector>

#include "monoflow/graph.hpp"

namespace monoflow::testing {

/// Random loopless multigraph with uniformly random signs.
SignedGraph random_signed_graph(std::mt19937& rng, int n, int m);
/// Random connected multigraph: a random spanning tree plus extra edges.
SignedGraph random_connected_graph(std::mt19937& rng, int n, int m);
/// Random connected graph in which every vertex has even degree.
SignedGraph random_eulerian_graph(std::mt19937& rng, int n, int cycles);
/// Random orientation of g.
Orientation random_orientation(std::mt19937& rng, const SignedGraph& g);
/// Random even-degree edge subset (sum of random cycles).
std::vector<int> random_even_subgraph(std::mt19937& rng, const SignedGraph& g);
/// Random vertex subset.
std::vector<bool> random_vertex_set(std::mt19937& rng, int n);
/// Same graph with vertices relabelled by a random permutation.
SignedGraph random_relabel(std::mt19937& rng, const SignedGraph& g);

}  // namespace monoflow::testing
