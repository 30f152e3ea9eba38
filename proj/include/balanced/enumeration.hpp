#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "balanced/graph.hpp"
#include "balanced/measure.hpp"

namespace balanced {

// Solves the exact pair system for (S, M): weights vanish off S, sum to 1,
// and transport costs agree across M. Returns a measure only when the
// solution is unique, strictly positive on S, and has cost strictly below
// the common maximum outside M — i.e. exactly when (S, M) is realized as
// the (support, max-set) pair of a basic balanced measure.
std::optional<Measure> solve_pair(const Graph& g, const VertexSet& s, const VertexSet& m);

struct CatalogEntry {
    Measure measure;
    SupportMaxPair pair;
};

// All basic balanced measures of a graph, canonically ordered by
// (support size, support mask, max-set mask).
struct BasicCatalog {
    int n = 0;
    std::vector<CatalogEntry> entries;

    int size() const { return static_cast<int>(entries.size()); }
    std::optional<int> index_of(const Measure& mu) const;
};

// Vertex cap for enumeration: BALANCED_MAX_N when set, else 16.
int enumeration_cap();

// Exhaustive scan of all nested pairs S ⊆ M ⊆ V. A balanced measure is
// basic exactly when the solution space of its own pair system is a point,
// so collecting every solve_pair success is complete. The scan shares
// elimination work across subsets and prunes every S whose columns are
// already dependent; arithmetic runs in overflow-checked machine integers
// with an exact big-integer fallback.
BasicCatalog enumerate_basic(const Graph& g, int max_n = -1);

// A balanced measure is basic iff the homogeneous system at its own
// (support, max-set) pair has only the zero solution.
bool is_basic(const Graph& g, const Measure& mu);

// Graph on the catalog entries with edges between compatible pairs.
struct CompatibilityGraph {
    int count = 0;
    std::vector<char> adj; // count*count
    bool adjacent(int i, int j) const { return adj[static_cast<std::size_t>(i) * count + j]; }
    std::vector<std::pair<int, int>> edges() const;
};

CompatibilityGraph compatibility_graph(const BasicCatalog& cat);

// All cliques of size 1..upto, in lexicographic order; by pairwise-vs-family
// equivalence each clique is a compatible set.
std::vector<std::vector<int>> compatible_cliques(const CompatibilityGraph& cg, int upto);

int count_components(const CompatibilityGraph& cg);

// |catalog| against the 2^(2n)-1 ceiling, plus the exact 2^k-1 count when
// the graph is a join family with k triple summands.
struct BoundsReport {
    long long count = 0;
    mpz_class upper_bound;
    bool upper_ok = false;
    std::optional<bool> join_family_exact;
};
BoundsReport check_bounds(const Graph& g, const BasicCatalog& cat,
                          std::optional<int> join_family_triples = std::nullopt);

std::string catalog_to_json(const BasicCatalog& cat, int indent = -1);
std::string compatibility_to_dot(const BasicCatalog& cat, const CompatibilityGraph& cg);

} // namespace balanced
