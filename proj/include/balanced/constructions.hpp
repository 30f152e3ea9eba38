#pragma once

#include <vector>

#include "balanced/graph.hpp"
#include "balanced/measure.hpp"
#include "balanced/rational.hpp"

namespace balanced {

// Iterated join of l singleton summands and k empty-triple summands
// (vertices: singletons first, then the triples consecutively). Carries
// exactly 2^k - 1 balanced measures, all of them basic.
struct JoinFamilySpec {
    int singles = 0; // l >= 0
    int triples = 0; // k >= 1
};

Graph build_join_family(const JoinFamilySpec& spec);

// The block-constant measure putting 1/(3m) on each vertex of m chosen
// triples (0-based triple indices).
Measure triple_measure(const JoinFamilySpec& spec, const std::vector<int>& chosen);

// Fixed 14-vertex graph on two 7-cliques with a sparse bridge pattern; the
// graph where one-sided extrapolation can stop on max-set growth alone.
// Reconstructed from its distance matrix (adjacency = distance-1 entries)
// and BFS-checked against it.
Graph build_example_14();
const DistanceMatrix& example_14_distances();

// The one-parameter family on the 14-vertex graph: weights
// (b,b,b, a,a,a, 0, a,a,a, b,b,b, 0) with b = 1/6 - a. Balanced exactly for
// a in [1/18, 1/9].
Measure mu_a(const Rational& a);

// 4x4 torus (Cartesian square of the 4-cycle), vertices (i,j) -> 4i+j.
Graph make_c4_torus();

// Weight 1/4 on the cells (i, perm(i)) — one per row and column; a basic
// balanced measure for every permutation.
Measure permutation_measure_c4c4(const std::vector<int>& perm);

// Block construction hosting an arbitrary graph h inside a compatibility
// graph: 3n vertices in n triples; triples of nonadjacent h-vertices get a
// complete bipartite bridge, adjacent ones the same minus a perfect
// matching. Diameter 2, so its distance matrix is the defining block
// matrix. Requires h.n() >= 2 (a single triple would be edgeless).
Graph build_gh(const Graph& h);

// 1/3 on each vertex of block i: basic, with max-set equal to block i plus
// the blocks of i's neighbors in h.
Measure gh_block_measure(const Graph& h, int i);

// Checks that the pairwise compatibility relation of the block measures
// reproduces h exactly (and that each block measure is basic balanced).
bool verify_gh_embedding(const Graph& h);

} // namespace balanced
