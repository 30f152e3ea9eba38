#pragma once

// Shared deterministic graph corpus for the test suites: all labeled trees
// on up to 6 vertices (via their sequence encodings) plus seeded random
// connected graphs.

#include <random>
#include <vector>

#include "balanced/errors.hpp"
#include "balanced/graph.hpp"

namespace corpus {

// Decodes the length-(n-2) sequence over {0..n-1} into its labeled tree.
inline balanced::Graph tree_from_code(int n, const std::vector<int>& code) {
    std::vector<int> degree(n, 1);
    for (int v : code) ++degree[v];
    std::vector<balanced::Graph::Edge> edges;
    std::vector<char> used(n, 0);
    // Standard decoding: repeatedly attach the smallest remaining leaf.
    std::vector<int> deg = degree;
    for (int v : code) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (deg[leaf] == 1 && !used[leaf]) {
                edges.push_back({leaf, v});
                used[leaf] = 1;
                --deg[v];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!used[v] && deg[v] == 1) (a < 0 ? a : b) = v;
    edges.push_back({a, b});
    return balanced::Graph::from_edges(n, edges);
}

// Every labeled tree on n vertices, n in [2, 6].
inline std::vector<balanced::Graph> all_trees(int n) {
    std::vector<balanced::Graph> out;
    if (n == 2) {
        out.push_back(balanced::make_path(2));
        return out;
    }
    std::vector<int> code(n - 2, 0);
    for (;;) {
        out.push_back(tree_from_code(n, code));
        int i = n - 3;
        while (i >= 0 && code[i] == n - 1) code[i--] = 0;
        if (i < 0) break;
        ++code[i];
    }
    return out;
}

inline balanced::Graph random_connected(std::mt19937& rng, int min_n, int max_n) {
    std::uniform_int_distribution<int> pick_n(min_n, max_n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (;;) {
        int n = pick_n(rng);
        std::vector<balanced::Graph::Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < 0.5) edges.push_back({u, v});
        try {
            return balanced::Graph::from_edges(n, edges);
        } catch (const balanced::DisconnectedError&) {
            // resample
        }
    }
}

inline std::vector<balanced::Graph> random_connected_batch(unsigned seed, int count,
                                                           int min_n, int max_n) {
    std::mt19937 rng(seed);
    std::vector<balanced::Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(random_connected(rng, min_n, max_n));
    return out;
}

} // namespace corpus
