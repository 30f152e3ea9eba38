#include "balanced/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "balanced/errors.hpp"

namespace balanced {

namespace {

// BFS from every source; returns the flat matrix, or nullopt when the graph
// is disconnected.
std::optional<std::vector<int>> bfs_all_pairs(int n, const std::vector<char>& adj) {
    std::vector<int> d(static_cast<std::size_t>(n) * n, -1);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        int* row = d.data() + static_cast<std::size_t>(s) * n;
        int head = 0, tail = 0;
        queue[tail++] = s;
        row[s] = 0;
        while (head < tail) {
            int u = queue[head++];
            const char* arow = adj.data() + static_cast<std::size_t>(u) * n;
            for (int v = 0; v < n; ++v) {
                if (arow[v] && row[v] < 0) {
                    row[v] = row[u] + 1;
                    queue[tail++] = v;
                }
            }
        }
        if (tail < n) return std::nullopt;
    }
    return d;
}

} // namespace

int DistanceMatrix::max_entry() const {
    int m = 0;
    for (int x : d_) m = std::max(m, x);
    return m;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges,
                        std::vector<std::string> labels, bool require_connected) {
    if (n <= 0) throw BadParameterError("vertex count must be positive");
    // Dense n*n storage; anything near this bound is far outside what the
    // measure machinery supports anyway.
    if (n > 4096) throw TooLargeError("graphs are capped at 4096 vertices");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw ParseError("label list length does not match vertex count");

    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n) * n, 0);
    g.labels_ = std::move(labels);

    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw ParseError("edge endpoint out of range: (" + std::to_string(e.u) +
                             "," + std::to_string(e.v) + ")");
        if (e.u == e.v)
            throw SelfLoopError("self-loop at vertex " + std::to_string(e.u));
        char& a = g.adj_[static_cast<std::size_t>(e.u) * n + e.v];
        if (a)
            throw ParseError("duplicate edge (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ")");
        a = 1;
        g.adj_[static_cast<std::size_t>(e.v) * n + e.u] = 1;
    }

    auto d = bfs_all_pairs(n, g.adj_);
    g.connected_ = d.has_value();
    if (g.connected_) {
        g.dist_ = DistanceMatrix(n, std::move(*d));
    } else if (require_connected) {
        throw DisconnectedError("graph is not connected");
    }
    return g;
}

std::vector<Graph::Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.push_back({u, v});
    return out;
}

int Graph::edge_count() const {
    int c = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) c += adjacent(u, v);
    return c;
}

int Graph::degree(int v) const {
    int c = 0;
    for (int u = 0; u < n_; ++u) c += adjacent(v, u);
    return c;
}

const DistanceMatrix& Graph::distances() const {
    if (!connected_)
        throw DisconnectedError("distances requested on a disconnected graph");
    return dist_;
}

Graph make_path(int n) {
    if (n < 1) throw BadParameterError("path needs at least 1 vertex");
    std::vector<Graph::Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph::from_edges(n, e);
}

Graph make_cycle(int n) {
    if (n < 3) throw BadParameterError("cycle needs at least 3 vertices");
    std::vector<Graph::Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, e);
}

Graph make_complete(int n) {
    if (n < 1) throw BadParameterError("complete graph needs at least 1 vertex");
    std::vector<Graph::Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph::from_edges(n, e);
}

Graph make_empty(int n) {
    if (n < 1) throw BadParameterError("empty graph needs at least 1 vertex");
    return Graph::from_edges(n, {}, {}, /*require_connected=*/false);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.n(), nh = h.n();
    std::vector<Graph::Edge> e;
    auto id = [nh](int i, int j) { return i * nh + j; };
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < nh; ++j) {
            for (int k = i + 1; k < ng; ++k)
                if (g.adjacent(i, k)) e.push_back({id(i, j), id(k, j)});
            for (int l = j + 1; l < nh; ++l)
                if (h.adjacent(j, l)) e.push_back({id(i, j), id(i, l)});
        }
    return Graph::from_edges(ng * nh, e, {}, /*require_connected=*/false);
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.n(), nh = h.n();
    std::vector<Graph::Edge> e;
    for (int u = 0; u < ng; ++u)
        for (int v = u + 1; v < ng; ++v)
            if (g.adjacent(u, v)) e.push_back({u, v});
    for (int u = 0; u < nh; ++u)
        for (int v = u + 1; v < nh; ++v)
            if (h.adjacent(u, v)) e.push_back({ng + u, ng + v});
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) e.push_back({u, ng + v});
    return Graph::from_edges(ng + nh, e);
}

Graph complement(const Graph& g) {
    const int n = g.n();
    std::vector<Graph::Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) e.push_back({u, v});
    return Graph::from_edges(n, e, {}, /*require_connected=*/false);
}

namespace {

Graph parse_graph_json(const std::string& text, bool allow_disconnected) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("graph JSON needs an integer \"n\"");
    int n = j["n"].get<int>();
    std::vector<Graph::Edge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
        for (const auto& pair : j["edges"]) {
            if (!pair.is_array() || pair.size() != 2 ||
                !pair[0].is_number_integer() || !pair[1].is_number_integer())
                throw ParseError("each edge must be a pair of integers");
            edges.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw ParseError("\"labels\" must be an array");
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) throw ParseError("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return Graph::from_edges(n, edges, std::move(labels), !allow_disconnected);
}

Graph parse_edge_list(const std::string& text, bool allow_disconnected) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<Graph::Edge> edges;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n) {
                int extra;
                if (ls >> extra) throw ParseError("first line must be the vertex count alone");
            }
            continue;
        }
        int u, v;
        if (ls >> u) {
            if (!(ls >> v)) throw ParseError("edge line needs two endpoints: " + line);
            int extra;
            if (ls >> extra) throw ParseError("edge line has trailing tokens: " + line);
            edges.push_back({u, v});
        }
    }
    if (n < 0) throw ParseError("missing vertex count line");
    return Graph::from_edges(n, edges, {}, !allow_disconnected);
}

} // namespace

Graph parse_graph(const std::string& text, bool allow_disconnected) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_graph_json(text, allow_disconnected);
        break;
    }
    return parse_edge_list(text, allow_disconnected);
}

std::string graph_to_json(const Graph& g, int indent) {
    nlohmann::json j;
    j["n"] = g.n();
    auto edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = edges;
    if (!g.labels().empty()) j["labels"] = g.labels();
    return j.dump(indent);
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string graph_to_dot(const Graph& g, const std::vector<std::string>* measure) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n(); ++v) {
        out << "  " << v << " [label=\"";
        if (!g.labels().empty())
            out << dot_escape(g.labels()[v]);
        else
            out << v;
        out << "\"";
        if (measure) out << ", measure=\"" << (*measure)[v] << "\"";
        out << "];\n";
    }
    for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

std::string distances_to_csv(const DistanceMatrix& d) {
    std::ostringstream out;
    for (int i = 0; i < d.n(); ++i) {
        for (int j = 0; j < d.n(); ++j) {
            if (j) out << ",";
            out << d.at(i, j);
        }
        out << "\n";
    }
    return out.str();
}

DistanceMatrix distances_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<int>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<int> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stoi(cell));
        rows.push_back(std::move(row));
    }
    const int n = static_cast<int>(rows.size());
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw ParseError("distance CSV is not square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return DistanceMatrix(n, std::move(flat));
}

} // namespace balanced
