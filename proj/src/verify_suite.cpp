#include "balanced/verify.hpp"

#include <algorithm>
#include <sstream>

#include "balanced/constructions.hpp"
#include "balanced/decomposition.hpp"
#include "balanced/enumeration.hpp"
#include "balanced/extrapolation.hpp"
#include "balanced/graph.hpp"
#include "balanced/measure.hpp"

namespace balanced {

namespace {

Measure endpoint_measure(int n) {
    std::vector<Rational> w(n, Rational(0));
    w[0] = Rational(1, 2);
    w[n - 1] = Rational(1, 2);
    return Measure(std::move(w));
}

Measure c8_pair(int v) {
    std::vector<Rational> w(8, Rational(0));
    w[v] = Rational(1, 2);
    w[(v + 4) % 8] = Rational(1, 2);
    return Measure(std::move(w));
}

bool path_unique(std::string& detail) {
    for (int n = 2; n <= 8; ++n) {
        auto cat = enumerate_basic(make_path(n));
        if (cat.size() != 1 || cat.entries[0].measure != endpoint_measure(n)) {
            detail = "path on " + std::to_string(n) + " vertices";
            return false;
        }
    }
    return true;
}

bool c4_two_basics(std::string& detail) {
    auto cat = enumerate_basic(make_cycle(4));
    Measure even{{Rational(1, 2), 0, Rational(1, 2), 0}};
    Measure odd{{0, Rational(1, 2), 0, Rational(1, 2)}};
    if (cat.size() != 2 || !cat.index_of(even) || !cat.index_of(odd)) {
        detail = "expected exactly the two alternating measures";
        return false;
    }
    return true;
}

bool c4_extrapolation(std::string& detail) {
    Graph g = make_cycle(4);
    Measure even{{Rational(1, 2), 0, Rational(1, 2), 0}};
    Extrapolation ext = extrapolate_right({&g, even, Measure::uniform(4)});
    Measure odd{{0, Rational(1, 2), 0, Rational(1, 2)}};
    if (ext.r != Rational(2) || ext.lambda_r != odd) {
        detail = "stopped at R=" + ext.r.str();
        return false;
    }
    if (!(ext.pair_lambda_r.support.size() < ext.pair_nu.support.size())) {
        detail = "support did not shrink";
        return false;
    }
    return true;
}

bool join_family_counts(std::string& detail) {
    const std::pair<int, int> specs[] = {{0, 2}, {1, 1}, {0, 3}, {1, 2}, {2, 1}};
    for (auto [l, k] : specs) {
        JoinFamilySpec spec{l, k};
        auto cat = enumerate_basic(build_join_family(spec));
        if (cat.size() != (1 << k) - 1) {
            detail = "l=" + std::to_string(l) + " k=" + std::to_string(k) + " count " +
                     std::to_string(cat.size());
            return false;
        }
        // Every entry is one of the block-constant measures.
        for (const auto& e : cat.entries) {
            std::vector<int> chosen;
            for (int t = 0; t < k; ++t)
                if (e.measure[l + 3 * t].sign() > 0) chosen.push_back(t);
            if (chosen.empty() || e.measure != triple_measure(spec, chosen)) {
                detail = "non-block-constant measure in catalog";
                return false;
            }
        }
    }
    return true;
}

bool balanced_interval_14(std::string& detail) {
    Graph g = build_example_14();
    const Rational lo(1, 18), hi(1, 9);
    const Rational grid[] = {
        lo - Rational(1, 1000), Rational(1, 20), Rational(1, 19), lo,
        Rational(1, 17),        Rational(1, 14), Rational(1, 12), Rational(1, 10),
        hi,                     hi + Rational(1, 1000), Rational(1, 8)};
    for (const auto& a : grid) {
        bool expect = a >= lo && a <= hi;
        if (is_balanced(g, mu_a(a)).balanced != expect) {
            detail = "a=" + a.str();
            return false;
        }
    }
    return true;
}

bool extrapolation_14(std::string& detail) {
    Graph g = build_example_14();
    Extrapolation ext = extrapolate_right({&g, mu_a(Rational(1, 9)), mu_a(Rational(1, 12))});
    if (ext.lambda_r != mu_a(Rational(1, 18))) {
        detail = "stopped at " + ext.lambda_r.str();
        return false;
    }
    if (ext.pair_lambda_r.support != ext.pair_nu.support) {
        detail = "support changed";
        return false;
    }
    if (!(ext.pair_lambda_r.max_set.superset_of(ext.pair_nu.max_set) &&
          ext.pair_lambda_r.max_set.size() > ext.pair_nu.max_set.size())) {
        detail = "max-set did not grow";
        return false;
    }
    return true;
}

bool c8_hull_exclusion(std::string& detail) {
    Graph g = make_cycle(8);
    auto res = hull_membership(g, c8_pair(1), {c8_pair(0), c8_pair(2), c8_pair(3)});
    if (res.inside) {
        detail = "sigma unexpectedly inside";
        return false;
    }
    return !res.certificate.empty();
}

bool c8_compatible_triple(std::string&) {
    Graph g = make_cycle(8);
    return is_compatible(g, {c8_pair(0), c8_pair(2), c8_pair(3)});
}

bool c4c4_permutations(std::string& detail) {
    Graph g = make_c4_torus();
    // All 24 permutation measures are balanced; exactly the 16 permutations
    // that mix the parity classes give basic measures.
    std::vector<int> perm{0, 1, 2, 3};
    int basic_count = 0;
    do {
        Measure mu = permutation_measure_c4c4(perm);
        if (!is_balanced(g, mu).balanced) {
            detail = "not balanced for " + mu.str();
            return false;
        }
        int s0 = perm[0] % 2;
        bool parity_aligned = true;
        for (int i = 1; i < 4; ++i) parity_aligned &= (perm[i] + i) % 2 == s0;
        if (is_basic(g, mu) != !parity_aligned) {
            detail = "basicness mismatch for " + mu.str();
            return false;
        }
        basic_count += is_basic(g, mu);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (basic_count != 16) {
        detail = "basic count " + std::to_string(basic_count);
        return false;
    }
    return true;
}

bool gh_embedding(std::string& detail) {
    const Graph hs[] = {make_path(3), make_path(4), make_cycle(4), make_complete(4),
                        make_cycle(5)};
    for (const auto& h : hs) {
        if (!verify_gh_embedding(h)) {
            detail = "host failed for an input on " + std::to_string(h.n()) + " vertices";
            return false;
        }
    }
    return true;
}

bool k1_join_bijection(std::string& detail) {
    const Graph gs[] = {make_cycle(4), make_cycle(5), join(make_empty(3), make_empty(3))};
    for (const auto& g : gs) {
        auto cat = enumerate_basic(g);
        auto lifted = enumerate_basic(join(make_complete(1), g));
        if (cat.size() != lifted.size()) {
            detail = "catalog sizes differ";
            return false;
        }
        for (const auto& e : cat.entries) {
            std::vector<Rational> w(g.n() + 1, Rational(0));
            for (int v = 0; v < g.n(); ++v) w[v + 1] = e.measure[v];
            if (!lifted.index_of(Measure(std::move(w)))) {
                detail = "zero-extension missing from lifted catalog";
                return false;
            }
        }
    }
    return true;
}

bool join_distances(std::string& detail) {
    const Graph gs[] = {make_cycle(4), make_cycle(5), make_complete(3)};
    const Graph hs[] = {make_path(2), make_empty(3), make_complete(2)};
    for (const auto& g : gs)
        for (const auto& h : hs) {
            Graph j = join(g, h);
            for (int u = 0; u < g.n(); ++u)
                for (int v = 0; v < g.n(); ++v)
                    if (j.distances().at(u, v) != g.distances().at(u, v)) {
                        detail = "distance changed under join";
                        return false;
                    }
            if (j.diameter() > 2) {
                detail = "join diameter above 2";
                return false;
            }
        }
    return true;
}

bool complete_uniform(std::string& detail) {
    for (int n = 2; n <= 6; ++n) {
        auto cat = enumerate_basic(make_complete(n));
        if (cat.size() != 1 || cat.entries[0].measure != Measure::uniform(n)) {
            detail = "complete graph on " + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool decompose_c4_uniform(std::string& detail) {
    Graph g = make_cycle(4);
    Decomposition d = decompose(g, Measure::uniform(4));
    if (!d.verified || d.parts.size() != 2) {
        detail = "expected two parts";
        return false;
    }
    for (const auto& p : d.parts)
        if (p.coeff != Rational(1, 2)) {
            detail = "unexpected coefficient " + p.coeff.str();
            return false;
        }
    return true;
}

bool decompose_roundtrip_c8(std::string& detail) {
    Graph g = make_cycle(8);
    Measure mix = convex_combination({c8_pair(0), c8_pair(2), c8_pair(3)},
                                     {Rational(1, 6), Rational(1, 3), Rational(1, 2)});
    Decomposition d = decompose(g, mix);
    if (!d.verified) {
        detail = "verification failed";
        return false;
    }
    return true;
}

} // namespace

std::vector<VerifyCheck> verify_suite() {
    return {
        {"path-endpoint-measure-unique", path_unique},
        {"c4-two-basics", c4_two_basics},
        {"c4-extrapolation-stops-on-support", c4_extrapolation},
        {"join-family-counts", join_family_counts},
        {"balanced-interval-14v", balanced_interval_14},
        {"extrapolation-14v-stops-on-maxset", extrapolation_14},
        {"c8-hull-exclusion", c8_hull_exclusion},
        {"c8-compatible-triple", c8_compatible_triple},
        {"c4c4-permutation-measures", c4c4_permutations},
        {"gh-embedding", gh_embedding},
        {"k1-join-bijection", k1_join_bijection},
        {"join-distance-preservation", join_distances},
        {"complete-graph-uniform", complete_uniform},
        {"decompose-c4-uniform", decompose_c4_uniform},
        {"decompose-roundtrip-c8", decompose_roundtrip_c8},
    };
}

int run_verify(std::ostream& out) {
    int failures = 0;
    auto suite = verify_suite();
    for (auto& check : suite) {
        std::string detail;
        bool ok = false;
        try {
            ok = check.run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        if (ok) {
            out << "PASS " << check.name << "\n";
        } else {
            ++failures;
            out << "FAIL " << check.name;
            if (!detail.empty()) out << " (" << detail << ")";
            out << "\n";
        }
    }
    out << (failures == 0 ? "all " : "") << suite.size() - failures << "/" << suite.size()
        << " checks passed\n";
    return failures;
}

} // namespace balanced
