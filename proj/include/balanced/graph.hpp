#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balanced/vertex_set.hpp"

namespace balanced {

// Exact hop distances of a connected graph, cached on the Graph at
// construction. Entries are plain machine integers; unit edge weights.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> flat) : n_(n), d_(std::move(flat)) {}

    int n() const { return n_; }
    int at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    const int* row(int i) const { return d_.data() + static_cast<std::size_t>(i) * n_; }
    int max_entry() const;

    bool operator==(const DistanceMatrix& o) const { return n_ == o.n_ && d_ == o.d_; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

// Finite simple graph. Connected graphs get their all-pairs BFS distance
// matrix computed eagerly, after which the object is immutable and safe to
// share across threads. Disconnected graphs are permitted only where a
// construction restores connectivity (join operands, complements, G_H
// inputs); asking one for distances throws.
class Graph {
public:
    struct Edge {
        int u, v;
    };

    // `require_connected` makes construction throw DisconnectedError when
    // BFS from vertex 0 does not reach everything.
    static Graph from_edges(int n, const std::vector<Edge>& edges,
                            std::vector<std::string> labels = {},
                            bool require_connected = true);

    int n() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v]; }
    bool is_connected() const { return connected_; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::vector<Edge> edges() const;
    int edge_count() const;
    int degree(int v) const;

    const DistanceMatrix& distances() const;
    int diameter() const { return distances().max_entry(); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    Graph() = default;

    int n_ = 0;
    std::vector<char> adj_; // n*n symmetric, zero diagonal
    std::vector<std::string> labels_;
    bool connected_ = false;
    DistanceMatrix dist_; // valid iff connected_
};

// --- Named generators -------------------------------------------------
//
// Vertex numbering is fixed so fixtures stay byte-stable:
//   path(n):      0-1-...-(n-1)
//   cycle(n):     ring 0-1-...-(n-1)-0, n >= 3
//   complete(n):  all pairs
//   empty(n):     no edges (raw vertex set; only meaningful under joins)
//   product(g,h): Cartesian product, (i,j) -> i*h.n() + j

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_empty(int n);
Graph cartesian_product(const Graph& g, const Graph& h);

// Graph join: g's vertices first, then h's, plus every cross edge. Operands
// may be disconnected raw vertex sets; the result is connected.
Graph join(const Graph& g, const Graph& h);

// Edge-set complement. The result may be disconnected (e.g. the complement
// of a complete graph), so no connectivity requirement is imposed.
Graph complement(const Graph& g);

// --- Parsing / serialization ------------------------------------------
//
// Two accepted inputs, auto-detected:
//   * JSON: {"n": int, "edges": [[u,v],...], "labels": [str,...]?}
//   * edge list: first line "n", then one "u v" per line, '#' comments
//
// Rejects self-loops, duplicate edges, out-of-range indices, and (unless
// allow_disconnected) disconnected graphs.
Graph parse_graph(const std::string& text, bool allow_disconnected = false);

std::string graph_to_json(const Graph& g, int indent = -1);

// Undirected DOT document; when a measure annotation is supplied, each
// vertex carries a measure="p/q" attribute.
std::string graph_to_dot(const Graph& g,
                         const std::vector<std::string>* measure = nullptr);

std::string distances_to_csv(const DistanceMatrix& d);
DistanceMatrix distances_from_csv(const std::string& text);

} // namespace balanced
