#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "balanced/enumeration.hpp"
#include "balanced/graph.hpp"
#include "balanced/measure.hpp"
#include "balanced/rational.hpp"

namespace balanced {

// For a non-basic balanced measure, produces a distinct balanced measure
// with the same (support, max-set) pair by stepping along the first
// canonical kernel direction of the pair system; the step size is half the
// smallest threshold at which a strict support or max-set condition would
// break. Returns nothing iff the measure is basic.
std::optional<Measure> find_kernel_witness(const Graph& g, const Measure& mu);

// Repeated kernel-witness extrapolation: each step strictly increases the
// (support, max-set) pair, so the walk reaches a basic measure dominating
// the input in finitely many steps.
struct ClimbStep {
    Measure witness;
    Rational r;
    Measure result;
};
struct ClimbResult {
    Measure basic;
    std::vector<ClimbStep> chain;
};
ClimbResult climb_to_basic(const Graph& g, const Measure& rho);

// Convex decomposition of a balanced measure into a compatible set of basic
// measures: builds the chain rho_j = (1/R_j) rho_{j+1} + ((R_j-1)/R_j) mu_j
// where mu_j is the basic measure the climb finds above rho_j, then
// back-substitutes to exact positive coefficients. Validity (exact
// reconstruction, all parts basic, parts compatible) is re-verified before
// returning.
struct DecompositionPart {
    Rational coeff;
    Measure basic;
};
struct ChainStep {
    Measure rho;
    Measure partner; // the dominating basic measure used for this step
    Rational r;
};
struct Decomposition {
    Measure target;
    std::vector<DecompositionPart> parts;
    std::vector<ChainStep> chain;
    bool verified = false;
};
Decomposition decompose(const Graph& g, const Measure& rho);

// Exact membership of mu in the convex hull of the given measures. Inside:
// coefficients of one exact representation. Outside: a separating
// functional y over the n coordinate rows plus the normalization row, with
// yᵀA <= 0 on every basis measure and yᵀb > 0 at mu.
struct HullResult {
    bool inside = false;
    std::vector<Rational> coefficients;
    std::vector<Rational> certificate;
};
HullResult hull_membership(const Graph& g, const Measure& mu,
                           const std::vector<Measure>& basis);

// Exhaustive check that no basic measure lies in the convex hull of any
// compatible clique that excludes it.
struct MinimalityReport {
    int basics_checked = 0;
    long long hull_checks = 0;
    bool all_excluded = true;
    std::vector<std::pair<int, std::vector<int>>> failures;
};
MinimalityReport check_weak_minimality(const Graph& g, const BasicCatalog& cat);

} // namespace balanced
