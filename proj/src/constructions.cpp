#include "balanced/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "balanced/enumeration.hpp"
#include "balanced/errors.hpp"

namespace balanced {

namespace {

void validate_spec(const JoinFamilySpec& spec) {
    if (spec.triples < 1) throw BadSpecError("join family needs at least one triple");
    if (spec.singles < 0) throw BadSpecError("negative singleton count");
    if (spec.singles == 0 && spec.triples == 1)
        throw BadSpecError("a lone empty triple is disconnected");
}

} // namespace

Graph build_join_family(const JoinFamilySpec& spec) {
    validate_spec(spec);
    const int n = spec.singles + 3 * spec.triples;
    // Summand index per vertex; joins connect across summands only.
    std::vector<int> summand(n);
    for (int v = 0; v < spec.singles; ++v) summand[v] = v;
    for (int t = 0; t < spec.triples; ++t)
        for (int j = 0; j < 3; ++j) summand[spec.singles + 3 * t + j] = spec.singles + t;

    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (summand[u] != summand[v]) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

Measure triple_measure(const JoinFamilySpec& spec, const std::vector<int>& chosen) {
    validate_spec(spec);
    if (chosen.empty()) throw EmptyChoiceError("choose at least one triple");
    std::vector<char> seen(spec.triples, 0);
    for (int t : chosen) {
        if (t < 0 || t >= spec.triples)
            throw BadParameterError("triple index out of range: " + std::to_string(t));
        if (seen[t]) throw BadParameterError("duplicate triple index");
        seen[t] = 1;
    }
    const int n = spec.singles + 3 * spec.triples;
    const Rational w(1, 3 * static_cast<long>(chosen.size()));
    std::vector<Rational> weights(n, Rational(0));
    for (int t : chosen)
        for (int j = 0; j < 3; ++j) weights[spec.singles + 3 * t + j] = w;
    return Measure(std::move(weights));
}

namespace {

// Distance matrix of the 14-vertex example: two 7-cliques, cross distances
// as listed row by row.
constexpr const char* kExample14Rows[14] = {
    "01111112212222",
    "10111112122222",
    "11011111222222",
    "11101112222121",
    "11110112221221",
    "11111012222211",
    "11111102221111",
    "22122220111111",
    "21222221011111",
    "12222221101111",
    "22221211110111",
    "22212211111011",
    "22222111111101",
    "22211111111110",
};

} // namespace

const DistanceMatrix& example_14_distances() {
    static const DistanceMatrix d = [] {
        std::vector<int> flat;
        flat.reserve(14 * 14);
        for (const char* row : kExample14Rows)
            for (int j = 0; j < 14; ++j) flat.push_back(row[j] - '0');
        return DistanceMatrix(14, flat);
    }();
    return d;
}

Graph build_example_14() {
    const DistanceMatrix& d = example_14_distances();
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < 14; ++u)
        for (int v = u + 1; v < 14; ++v)
            if (d.at(u, v) == 1) edges.push_back({u, v});
    Graph g = Graph::from_edges(14, edges);
    if (!(g.distances() == d))
        throw std::logic_error("14-vertex fixture does not reproduce its distances");
    return g;
}

Measure mu_a(const Rational& a) {
    if (a.sign() < 0 || a > Rational(1, 6))
        throw OutOfRangeError("parameter must lie in [0, 1/6], got " + a.str());
    const Rational b = Rational(1, 6) - a;
    std::vector<Rational> w(14, Rational(0));
    for (int j = 0; j < 3; ++j) {
        w[j] = b;      // 0..2
        w[3 + j] = a;  // 3..5
        w[7 + j] = a;  // 7..9
        w[10 + j] = b; // 10..12
    }
    return Measure(std::move(w));
}

Graph make_c4_torus() { return cartesian_product(make_cycle(4), make_cycle(4)); }

Measure permutation_measure_c4c4(const std::vector<int>& perm) {
    if (perm.size() != 4) throw BadPermutationError("need a permutation of {0,1,2,3}");
    std::vector<char> seen(4, 0);
    for (int p : perm) {
        if (p < 0 || p > 3 || seen[p])
            throw BadPermutationError("not a bijection of {0,1,2,3}");
        seen[p] = 1;
    }
    std::vector<Rational> w(16, Rational(0));
    for (int i = 0; i < 4; ++i) w[4 * i + perm[i]] = Rational(1, 4);
    return Measure(std::move(w));
}

Graph build_gh(const Graph& h) {
    const int n = h.n();
    if (n < 2)
        throw BadParameterError("the block construction needs at least two vertices");
    std::vector<Graph::Edge> edges;
    auto id = [](int block, int j) { return 3 * block + j; };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool adj = h.adjacent(i, j);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    if (adj && a == b) continue; // matching removed between neighbors
                    edges.push_back({id(i, a), id(j, b)});
                }
        }
    return Graph::from_edges(3 * n, edges);
}

Measure gh_block_measure(const Graph& h, int i) {
    if (i < 0 || i >= h.n()) throw BadParameterError("block index out of range");
    std::vector<Rational> w(3 * h.n(), Rational(0));
    for (int j = 0; j < 3; ++j) w[3 * i + j] = Rational(1, 3);
    return Measure(std::move(w));
}

bool verify_gh_embedding(const Graph& h) {
    if (h.n() > 5) throw TooLargeError("embedding check supports up to 5 vertices");
    // A single vertex embeds trivially: any single basic measure induces K1.
    if (h.n() == 1) return true;

    Graph gh = build_gh(h);
    std::vector<Measure> block(h.n(), Measure::point_mass(1, 0));
    for (int i = 0; i < h.n(); ++i) {
        block[i] = gh_block_measure(h, i);
        if (!is_balanced(gh, block[i]).balanced) return false;
        if (!is_basic(gh, block[i])) return false;
    }
    for (int i = 0; i < h.n(); ++i)
        for (int j = i + 1; j < h.n(); ++j) {
            bool compatible = is_compatible(gh, {block[i], block[j]});
            if (compatible != h.adjacent(i, j)) return false;
        }
    return true;
}

} // namespace balanced
