#pragma once

#include <vector>

#include "balanced/graph.hpp"
#include "balanced/measure.hpp"
#include "balanced/rational.hpp"

namespace balanced {

// The line lambda_t = (1-t)*mu + t*nu through two distinct measures.
// balanced_interval/extrapolate_right additionally require both measures
// balanced with spt(mu) included in spt(nu) and M(mu) containing M(nu).
struct LineFamily {
    const Graph* graph;
    Measure mu;
    Measure nu;
};

// Signed weight vector at parameter t; entries always sum to 1 but may be
// negative outside the measure interval.
std::vector<Rational> line_measure(const LineFamily& fam, const Rational& t);

// A constraint that becomes active at an endpoint: either a support entry
// hitting zero or an outside vertex joining the cost-maximizing set.
struct Binding {
    enum class Kind { Support, MaxSet };
    Kind kind;
    int vertex;

    bool operator==(const Binding& o) const {
        return kind == o.kind && vertex == o.vertex;
    }
};

// Exact parameter interval [left, right] on which lambda_t is a balanced
// measure, with the full set of constraints active at each endpoint.
struct BalancedInterval {
    Rational left;
    Rational right;
    std::vector<Binding> binding_at_left;
    std::vector<Binding> binding_at_right;
};

BalancedInterval balanced_interval(const LineFamily& fam);

// One-sided extrapolation: walks the family past nu to the last balanced
// parameter R > 1. The resulting pair strictly dominates nu's pair, and
// nu = (1/R)*lambda_R + ((R-1)/R)*mu reconstructs exactly.
struct Extrapolation {
    Rational r;
    Measure lambda_r;
    SupportMaxPair pair_nu;
    SupportMaxPair pair_lambda_r;
    PosetOrder relation; // poset_compare(pair_lambda_r, pair_nu); always Greater
    std::vector<Binding> binding;
};

Extrapolation extrapolate_right(const LineFamily& fam);

} // namespace balanced
