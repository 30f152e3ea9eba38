#include <doctest.h>

#include <random>

#include "balanced/errors.hpp"
#include "balanced/graph.hpp"
#include "support/corpus.hpp"

using namespace balanced;

namespace {

void check_distance_axioms(const Graph& g) {
    const DistanceMatrix& d = g.distances();
    const int n = g.n();
    for (int i = 0; i < n; ++i) {
        CHECK(d.at(i, i) == 0);
        for (int j = 0; j < n; ++j) {
            CHECK(d.at(i, j) == d.at(j, i));
            CHECK((d.at(i, j) == 1) == g.adjacent(i, j));
            for (int k = 0; k < n; ++k)
                CHECK(d.at(i, j) <= d.at(i, k) + d.at(k, j));
        }
    }
}

} // namespace

TEST_CASE("parse JSON graphs") {
    Graph k2 = parse_graph(R"({"n":2,"edges":[[0,1]]})");
    CHECK(k2.n() == 2);
    CHECK(k2.adjacent(0, 1));

    Graph c4 = parse_graph(R"({"n":4,"edges":[[0,1],[1,2],[2,3],[3,0]]})");
    CHECK(c4 == make_cycle(4));

    CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[0,1]]})"), DisconnectedError);
    CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[0,0]]})"), SelfLoopError);
    CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[0,1],[1,0]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[0,5]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"edges":[[0,1]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph("{not json"), ParseError);
}

TEST_CASE("parse edge lists") {
    Graph p3 = parse_graph("3\n0 1\n1 2\n");
    CHECK(p3 == make_path(3));
    Graph with_comments = parse_graph("# path\n3\n0 1 # first\n\n1 2\n");
    CHECK(with_comments == make_path(3));
    CHECK_THROWS_AS(parse_graph("0 1\n1 2\n"), ParseError); // missing count... first token read as n
    CHECK_THROWS_AS(parse_graph("3\n0\n"), ParseError);
}

TEST_CASE("graph JSON round trip") {
    Graph g = make_cycle(5);
    CHECK(parse_graph(graph_to_json(g)) == g);

    Graph labeled = parse_graph(R"({"n":2,"edges":[[0,1]],"labels":["a","b"]})");
    CHECK(labeled.labels() == std::vector<std::string>{"a", "b"});
    Graph back = parse_graph(graph_to_json(labeled));
    CHECK(back.labels() == labeled.labels());
    CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[0,1]],"labels":["a"]})"), ParseError);
}

TEST_CASE("named generators") {
    Graph p4 = make_path(4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.distances().at(0, 3) == 3);
    const int row0[] = {0, 1, 2, 3};
    for (int j = 0; j < 4; ++j) CHECK(p4.distances().at(0, j) == row0[j]);

    Graph c8 = make_cycle(8);
    CHECK(c8.distances().at(0, 4) == 4); // antipodal

    Graph k5 = make_complete(5);
    CHECK(k5.diameter() == 1);

    CHECK_THROWS_AS(make_cycle(2), BadParameterError);
    CHECK_THROWS_AS(make_path(0), BadParameterError);
}

TEST_CASE("cartesian product of two 4-cycles") {
    Graph t = cartesian_product(make_cycle(4), make_cycle(4));
    CHECK(t.n() == 16);
    CHECK(t.distances().at(0, 10) == 4); // (0,0) to (2,2)
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) {
                    int dc4_ik = std::min((i - k + 4) % 4, (k - i + 4) % 4);
                    int dc4_jl = std::min((j - l + 4) % 4, (l - j + 4) % 4);
                    CHECK(t.distances().at(4 * i + j, 4 * k + l) == dc4_ik + dc4_jl);
                }
}

TEST_CASE("join basics") {
    Graph k33 = join(make_empty(3), make_empty(3));
    CHECK(k33.n() == 6);
    CHECK(k33.edge_count() == 9);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) {
            if (u != v) {
                CHECK(k33.distances().at(u, v) == 2);
                CHECK(k33.distances().at(3 + u, 3 + v) == 2);
            }
            CHECK(k33.distances().at(u, 3 + v) == 1);
        }

    Graph wheel_hub = join(make_complete(1), make_cycle(4));
    CHECK(wheel_hub.n() == 5);
    for (int v = 1; v < 5; ++v) CHECK(wheel_hub.adjacent(0, v));
}

TEST_CASE("join diameter is at most 2") {
    auto gs = corpus::random_connected_batch(11, 8, 2, 6);
    std::mt19937 rng(12);
    for (std::size_t i = 0; i + 1 < gs.size(); i += 2) {
        Graph j = join(gs[i], gs[i + 1]);
        CHECK(j.diameter() <= 2);
    }
    CHECK(join(make_empty(1), make_empty(1)).diameter() == 1);
}

TEST_CASE("join preserves distances of diameter-2 summands") {
    auto pool = corpus::random_connected_batch(21, 30, 3, 7);
    int tested = 0;
    for (std::size_t i = 0; i + 1 < pool.size() && tested < 10; i += 2) {
        const Graph& g = pool[i];
        if (g.diameter() > 2) continue;
        ++tested;
        Graph j = join(g, pool[i + 1]);
        for (int u = 0; u < g.n(); ++u)
            for (int v = 0; v < g.n(); ++v)
                CHECK(j.distances().at(u, v) == g.distances().at(u, v));
    }
    CHECK(tested > 0);
}

TEST_CASE("complement") {
    Graph e3 = complement(make_complete(3));
    CHECK(e3.edge_count() == 0);
    CHECK_FALSE(e3.is_connected());
    CHECK_THROWS_AS(e3.distances(), DisconnectedError);

    // C5 is self-complementary under the relabeling v -> 2v mod 5.
    Graph c5 = make_cycle(5);
    Graph cc5 = complement(c5);
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v)
            CHECK(cc5.adjacent((2 * u) % 5, (2 * v) % 5) == c5.adjacent(u, v));

    auto gs = corpus::random_connected_batch(31, 6, 2, 6);
    for (const auto& g : gs) CHECK(complement(complement(g)) == g);
}

TEST_CASE("distance axioms across the corpus") {
    check_distance_axioms(make_path(7));
    check_distance_axioms(make_cycle(9));
    check_distance_axioms(make_complete(6));
    check_distance_axioms(join(make_empty(3), make_empty(3)));
    for (const auto& g : corpus::random_connected_batch(41, 12, 2, 8))
        check_distance_axioms(g);

    // and on some larger instances, up to the 64-vertex set limit
    std::mt19937 rng(53);
    check_distance_axioms(corpus::random_connected(rng, 40, 48));
    check_distance_axioms(corpus::random_connected(rng, 60, 64));
    check_distance_axioms(make_cycle(64));
}

TEST_CASE("bipartite join distances") {
    Graph k33 = join(make_empty(3), make_empty(3));
    // within-part distance 2, cross-part 1
    CHECK(k33.distances().at(0, 1) == 2);
    CHECK(k33.distances().at(0, 3) == 1);
}

TEST_CASE("DOT export carries labels and measure annotations") {
    Graph k2 = make_path(2);
    std::vector<std::string> m{"1/2", "1/2"};
    std::string dot = graph_to_dot(k2, &m);
    CHECK(dot.find("graph G {") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("measure=\"1/2\"") != std::string::npos);

    Graph quoted = Graph::from_edges(2, {{0, 1}}, {"a\"b", "c\\d"});
    std::string qdot = graph_to_dot(quoted);
    CHECK(qdot.find("label=\"a\\\"b\"") != std::string::npos);
    CHECK(qdot.find("label=\"c\\\\d\"") != std::string::npos);
}

TEST_CASE("distance CSV round trip") {
    Graph g = make_cycle(6);
    DistanceMatrix d = distances_from_csv(distances_to_csv(g.distances()));
    CHECK(d == g.distances());
}

TEST_CASE("parsers reject garbage without crashing") {
    std::mt19937 rng(71);
    std::uniform_int_distribution<int> len(0, 40), byte(32, 126);
    const std::string seeds[] = {
        "{", "}", "[[", "{\"n\":", "{\"n\":1e9,\"edges\":[]}", "-5\n0 1",
        "{\"n\":2,\"edges\":[[0,1],[0,1]]}", "3 3\n", "{\"n\":0,\"edges\":[]}",
    };
    for (const auto& s : seeds) CHECK_THROWS_AS(parse_graph(s), balanced::Error);
    for (int trial = 0; trial < 300; ++trial) {
        std::string s;
        for (int i = len(rng); i > 0; --i) s.push_back(static_cast<char>(byte(rng)));
        try {
            parse_graph(s);
        } catch (const balanced::Error&) {
            // any structured rejection is fine; crashes are not
        }
    }
}
