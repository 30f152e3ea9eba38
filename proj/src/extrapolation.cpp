#include "balanced/extrapolation.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "balanced/errors.hpp"

namespace balanced {

std::vector<Rational> line_measure(const LineFamily& fam, const Rational& t) {
    if (fam.mu.size() != fam.graph->n() || fam.nu.size() != fam.graph->n())
        throw DimensionMismatchError("family measures do not fit the graph");
    std::vector<Rational> w(fam.graph->n());
    const Rational s = Rational(1) - t;
    for (int v = 0; v < fam.graph->n(); ++v)
        w[v] = s * fam.mu[v] + t * fam.nu[v];
    return w;
}

namespace {

struct ConstraintScan {
    std::optional<Rational> left, right;
    std::vector<Binding> binding_left, binding_right;

    // f(t) = value0 + t*slope must stay >= 0.
    void add(const Rational& value0, const Rational& slope, Binding b) {
        if (slope.is_zero()) return; // constant; hypotheses guarantee value0 >= 0
        Rational root = -value0 / slope;
        if (slope.sign() > 0) {
            if (!left || root > *left) {
                left = root;
                binding_left.clear();
            }
            if (root == *left) binding_left.push_back(b);
        } else {
            if (!right || root < *right) {
                right = root;
                binding_right.clear();
            }
            if (root == *right) binding_right.push_back(b);
        }
    }
};

void sort_bindings(std::vector<Binding>& bs) {
    std::sort(bs.begin(), bs.end(), [](const Binding& a, const Binding& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.vertex < b.vertex;
    });
}

} // namespace

BalancedInterval balanced_interval(const LineFamily& fam) {
    const Graph& g = *fam.graph;
    if (fam.mu == fam.nu)
        throw DegenerateError("the two family measures coincide");

    auto cert_mu = is_balanced(g, fam.mu);
    auto cert_nu = is_balanced(g, fam.nu);
    if (!cert_mu.balanced || !cert_nu.balanced)
        throw HypothesisError("both family measures must be balanced");

    const VertexSet spt_mu = fam.mu.support();
    const VertexSet spt_nu = fam.nu.support();
    const VertexSet max_mu = max_set(g, fam.mu);
    const VertexSet max_nu = max_set(g, fam.nu);
    if (!spt_mu.subset_of(spt_nu))
        throw HypothesisError("spt(mu) must be contained in spt(nu)");
    if (!max_nu.subset_of(max_mu))
        throw HypothesisError("M(mu) must contain M(nu)");

    const CostVector cost_mu = transport_cost(g, fam.mu);
    const CostVector cost_nu = transport_cost(g, fam.nu);
    const int anchor = max_nu.first(); // in M(nu) subset M(mu): costs maximal for both

    ConstraintScan scan;
    // Support constraints: lambda_t(v) >= 0 for v in spt(nu). Vertices
    // outside spt(nu) carry zero weight in both measures and stay zero.
    for (int v : spt_nu.vertices())
        scan.add(fam.mu[v], fam.nu[v] - fam.mu[v], {Binding::Kind::Support, v});
    // Max-set constraints: cost at the anchor stays >= cost at w for every
    // w outside M(nu).
    for (int w = 0; w < g.n(); ++w) {
        if (max_nu.contains(w)) continue;
        Rational v0 = cost_mu[anchor] - cost_mu[w];
        Rational v1 = cost_nu[anchor] - cost_nu[w];
        scan.add(v0, v1 - v0, {Binding::Kind::MaxSet, w});
    }

    // mu != nu forces a support entry rising and one falling, so both sides
    // are bounded; hitting this indicates a hypothesis-checking bug.
    if (!scan.left || !scan.right)
        throw UnboundedError("balanced interval unbounded; hypotheses cannot hold");

    sort_bindings(scan.binding_left);
    sort_bindings(scan.binding_right);
    return {*scan.left, *scan.right, std::move(scan.binding_left),
            std::move(scan.binding_right)};
}

Extrapolation extrapolate_right(const LineFamily& fam) {
    BalancedInterval interval = balanced_interval(fam);
    if (interval.right <= Rational(1))
        throw std::logic_error("extrapolation endpoint not past nu");

    Measure lambda_r{line_measure(fam, interval.right)};
    Extrapolation out{
        interval.right,
        lambda_r,
        support_max_pair(*fam.graph, fam.nu),
        support_max_pair(*fam.graph, lambda_r),
        PosetOrder::Incomparable,
        std::move(interval.binding_at_right),
    };
    out.relation = poset_compare(out.pair_lambda_r, out.pair_nu);
    if (out.relation != PosetOrder::Greater)
        throw std::logic_error("extrapolation endpoint pair fails to dominate");
    return out;
}

} // namespace balanced
