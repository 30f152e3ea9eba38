#pragma once

#include <string>
#include <vector>

#include "balanced/graph.hpp"
#include "balanced/rational.hpp"
#include "balanced/vertex_set.hpp"

namespace balanced {

// Probability measure on the vertices of an n-vertex graph: nonnegative
// exact rational weights summing to exactly 1. Immutable once built.
class Measure {
public:
    explicit Measure(std::vector<Rational> weights);

    static Measure point_mass(int n, int v);
    static Measure uniform(int n);
    static Measure uniform_on(int n, const VertexSet& s);

    int size() const { return static_cast<int>(w_.size()); }
    const Rational& operator[](int v) const { return w_[v]; }
    const std::vector<Rational>& weights() const { return w_; }

    VertexSet support() const;

    bool operator==(const Measure& o) const { return w_ == o.w_; }
    bool operator!=(const Measure& o) const { return w_ != o.w_; }

    std::string str() const; // "(1/2, 0, 1/2, 0)"

private:
    std::vector<Rational> w_;
};

// (support, cost-maximizing set) pair of a measure, with the partial order
// under which the basic measures are exactly the maximal elements: a pair
// increases when the support shrinks or the cost-maximizing set grows.
struct SupportMaxPair {
    VertexSet support;
    VertexSet max_set;

    bool operator==(const SupportMaxPair& o) const {
        return support == o.support && max_set == o.max_set;
    }
};

enum class PosetOrder { Less, Equal, Greater, Incomparable };

PosetOrder poset_compare(const SupportMaxPair& p, const SupportMaxPair& q);

// Transport costs (D * mu): entry v is the cost of hauling all of mu to v,
// equivalently the earth mover's distance from mu to the point mass at v.
using CostVector = std::vector<Rational>;
CostVector transport_cost(const Graph& g, const Measure& mu);

Rational max_cost(const CostVector& costs);
VertexSet max_set(const Graph& g, const Measure& mu);
SupportMaxPair support_max_pair(const Graph& g, const Measure& mu);

// Balancedness check with a certificate: any supported vertex whose cost
// falls short of the maximum is reported with its exact deficit.
struct BalanceCertificate {
    struct Violation {
        int vertex;
        Rational deficit;
    };
    bool balanced = false;
    Rational max_cost;
    std::vector<Violation> violations;
};
BalanceCertificate is_balanced(const Graph& g, const Measure& mu);

// <mu, D mu>, the distance quadratic form.
Rational energy(const Graph& g, const Measure& mu);

// A family is compatible when the union of supports sits inside the
// intersection of cost-maximizing sets. Inputs must be balanced.
bool is_compatible(const Graph& g, const std::vector<Measure>& measures);

Measure convex_combination(const std::vector<Measure>& measures,
                           const std::vector<Rational>& coeffs);

// Greedy farthest-point sequence: starting from a seed multiset, repeatedly
// append the vertex maximizing the summed distance to the current multiset
// (ties to the lowest index). Empirical measures are exact counts/total.
struct GreedyStep {
    int vertex;
    Measure empirical;
};
struct GreedyResult {
    Measure seed_empirical;
    std::vector<GreedyStep> steps;

    const Measure& final_empirical() const {
        return steps.empty() ? seed_empirical : steps.back().empirical;
    }
};
GreedyResult greedy_sequence(const Graph& g, const std::vector<int>& seed, int steps);

// Additive near-balancedness: every supported vertex is within eps of the
// maximal transport cost.
bool epsilon_balanced(const Graph& g, const Measure& mu, const Rational& eps);

// Wire format: JSON array of fraction strings, e.g. ["1/2","0","1/2","0"].
Measure parse_measure(const std::string& json_text);
std::string measure_to_json(const Measure& mu);

} // namespace balanced
