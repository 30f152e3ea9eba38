#include <doctest.h>

#include "balanced/constructions.hpp"
#include "balanced/enumeration.hpp"
#include "balanced/errors.hpp"
#include "balanced/extrapolation.hpp"
#include "support/corpus.hpp"

using namespace balanced;

namespace {

Measure frac(std::vector<std::string> xs) { return Measure(from_fraction_strings(xs)); }

LineFamily c4_family(const Graph& c4) {
    return {&c4, frac({"1/2", "0", "1/2", "0"}), Measure::uniform(4)};
}

} // namespace

TEST_CASE("line measure endpoints and affine form") {
    Graph c4 = make_cycle(4);
    LineFamily fam = c4_family(c4);
    CHECK(line_measure(fam, Rational(0)) == fam.mu.weights());
    CHECK(line_measure(fam, Rational(1)) == fam.nu.weights());

    auto at2 = line_measure(fam, Rational(2));
    CHECK(at2 == from_fraction_strings({"0", "1/2", "0", "1/2"}));

    auto at3 = line_measure(fam, Rational(3));
    CHECK(at3[0] == Rational(-1, 4)); // leaves the simplex

    // entries always sum to 1
    for (const Rational& t : {Rational(-5), Rational(1, 7), Rational(12)}) {
        Rational s(0);
        for (const auto& x : line_measure(fam, t)) s += x;
        CHECK(s == Rational(1));
    }
}

TEST_CASE("balanced interval on the 4-cycle") {
    Graph c4 = make_cycle(4);
    BalancedInterval iv = balanced_interval(c4_family(c4));
    // Left endpoint is 0: mu already lacks the odd vertices, so any t < 0
    // sends their weights negative.
    CHECK(iv.left == Rational(0));
    CHECK(iv.right == Rational(2));
    REQUIRE(iv.binding_at_left.size() == 2);
    CHECK(iv.binding_at_left[0].vertex == 1);
    CHECK(iv.binding_at_left[1].vertex == 3);
    // Both even entries hit zero together at R = 2.
    REQUIRE(iv.binding_at_right.size() == 2);
    CHECK(iv.binding_at_right[0].kind == Binding::Kind::Support);
    CHECK(iv.binding_at_right[0].vertex == 0);
    CHECK(iv.binding_at_right[1].vertex == 2);
}

TEST_CASE("interval contains [0,1] and fails just outside") {
    Graph c4 = make_cycle(4);
    auto check_family = [](const Graph& g, const LineFamily& fam) {
        BalancedInterval iv = balanced_interval(fam);
        CHECK(iv.left <= Rational(0));
        CHECK(iv.right > Rational(1));
        const Rational step = (iv.right - iv.left) / Rational(7);
        for (int i = 0; i <= 7; ++i) {
            auto w = line_measure(fam, iv.left + step * Rational(i));
            CHECK(is_balanced(g, Measure(w)).balanced);
        }
        auto beyond = line_measure(fam, iv.right + Rational(1, 1000));
        bool outside = false;
        try {
            outside = !is_balanced(g, Measure(beyond)).balanced;
        } catch (const BadParameterError&) {
            outside = true; // left the simplex entirely
        }
        CHECK(outside);
        auto before = line_measure(fam, iv.left - Rational(1, 1000));
        bool outside_left = false;
        try {
            outside_left = !is_balanced(g, Measure(before)).balanced;
        } catch (const BadParameterError&) {
            outside_left = true;
        }
        CHECK(outside_left);
    };
    check_family(c4, c4_family(c4));

    Graph ex14 = build_example_14();
    check_family(ex14, {&ex14, mu_a(Rational(1, 9)), mu_a(Rational(1, 12))});
}

TEST_CASE("interior of the interval keeps nu's pair") {
    Graph c4 = make_cycle(4);
    LineFamily fam = c4_family(c4);
    BalancedInterval iv = balanced_interval(fam);
    const Rational step = (iv.right - iv.left) / Rational(5);
    for (int i = 1; i < 5; ++i) {
        Rational t = iv.left + step * Rational(i);
        if (t == iv.left || t == iv.right) continue;
        Measure lam{line_measure(fam, t)};
        CHECK(support_max_pair(c4, lam) == support_max_pair(c4, fam.nu));
    }
}

TEST_CASE("hypothesis checking") {
    Graph c4 = make_cycle(4);
    Measure even = frac({"1/2", "0", "1/2", "0"});
    CHECK_THROWS_AS(balanced_interval({&c4, even, even}), DegenerateError);
    // unbalanced nu
    CHECK_THROWS_AS(balanced_interval({&c4, even, frac({"9/10", "0", "1/10", "0"})}),
                    HypothesisError);
    // support of mu must sit inside support of nu
    CHECK_THROWS_AS(balanced_interval({&c4, Measure::uniform(4), even}), HypothesisError);
}

TEST_CASE("extrapolate right on the 4-cycle shrinks support") {
    Graph c4 = make_cycle(4);
    Extrapolation ext = extrapolate_right(c4_family(c4));
    CHECK(ext.r == Rational(2));
    CHECK(ext.lambda_r == frac({"0", "1/2", "0", "1/2"}));
    CHECK(ext.relation == PosetOrder::Greater);
    CHECK(ext.pair_lambda_r.support == VertexSet::from_vertices({1, 3}));
    CHECK(ext.pair_lambda_r.support.size() < ext.pair_nu.support.size());

    // reconstruction: nu = (1/R) lambda_R + ((R-1)/R) mu
    Measure recon = convex_combination({ext.lambda_r, c4_family(c4).mu},
                                       {Rational(1) / ext.r,
                                        (ext.r - Rational(1)) / ext.r});
    CHECK(recon == Measure::uniform(4));
}

TEST_CASE("extrapolation properties over sampled dominated pairs") {
    // Families (basic part, clique combination) satisfy the hypotheses by
    // coefficient domination, giving a broad sweep of valid inputs.
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> cf(1, 5);
    int families = 0;
    std::vector<Graph> pool{make_cycle(4), make_cycle(6), make_cycle(8),
                            cartesian_product(make_path(2), make_path(3))};
    for (auto& g : corpus::random_connected_batch(345, 10, 3, 7))
        pool.push_back(std::move(g));
    for (const auto& g : pool) {
        if (families > 40) break;
        auto cat = enumerate_basic(g);
        auto cliques = compatible_cliques(compatibility_graph(cat),
                                          std::min(3, cat.size()));
        for (const auto& clique : cliques) {
            if (clique.size() < 2) continue;
            std::vector<Measure> fam;
            std::vector<Rational> coeffs;
            Rational sum(0);
            for (int i : clique) {
                fam.push_back(cat.entries[i].measure);
                coeffs.emplace_back(cf(rng));
                sum += coeffs.back();
            }
            for (auto& c : coeffs) c /= sum;
            Measure mix = convex_combination(fam, coeffs);

            LineFamily line{&g, fam[0], mix};
            BalancedInterval iv = balanced_interval(line);
            CHECK(iv.left <= Rational(0));
            CHECK(iv.right > Rational(1));

            // dense sample inside, strictly outside just beyond
            const Rational step = (iv.right - iv.left) / Rational(6);
            for (int i = 0; i <= 6; ++i) {
                Measure lam{line_measure(line, iv.left + step * Rational(i))};
                CHECK(is_balanced(g, lam).balanced);
            }
            for (const Rational& t : {iv.right + Rational(1, 1000),
                                      iv.left - Rational(1, 1000)}) {
                bool outside = false;
                try {
                    outside = !is_balanced(g, Measure(line_measure(line, t))).balanced;
                } catch (const BadParameterError&) {
                    outside = true;
                }
                CHECK(outside);
            }

            // interior constancy of the pair, strict growth at R
            Measure mid{line_measure(line, (iv.left + iv.right) / Rational(2))};
            if ((iv.left + iv.right) / Rational(2) != iv.left &&
                (iv.left + iv.right) / Rational(2) != iv.right)
                CHECK(support_max_pair(g, mid) == support_max_pair(g, mix));

            Extrapolation ext = extrapolate_right(line);
            CHECK(ext.relation == PosetOrder::Greater);
            Measure recon = convex_combination(
                {ext.lambda_r, fam[0]},
                {Rational(1) / ext.r, (ext.r - Rational(1)) / ext.r});
            CHECK(recon == mix);
            if (++families > 40) break;
        }
    }
    CHECK(families > 0);
}

TEST_CASE("extrapolate right on the 14-vertex example grows the max-set") {
    Graph g = build_example_14();
    LineFamily fam{&g, mu_a(Rational(1, 9)), mu_a(Rational(1, 12))};
    Extrapolation ext = extrapolate_right(fam);
    CHECK(ext.r == Rational(2));
    CHECK(ext.lambda_r == mu_a(Rational(1, 18)));
    CHECK(ext.pair_lambda_r.support == ext.pair_nu.support);
    CHECK(ext.pair_lambda_r.max_set.superset_of(ext.pair_nu.max_set));
    CHECK(ext.pair_lambda_r.max_set.size() == ext.pair_nu.max_set.size() + 1);
    REQUIRE(ext.binding.size() == 1);
    CHECK(ext.binding[0].kind == Binding::Kind::MaxSet);
    CHECK(ext.binding[0].vertex == 13);

    Measure recon = convex_combination({ext.lambda_r, fam.mu},
                                       {Rational(1) / ext.r,
                                        (ext.r - Rational(1)) / ext.r});
    CHECK(recon == fam.nu);
}
