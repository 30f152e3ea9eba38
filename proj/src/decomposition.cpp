#include "balanced/decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "balanced/errors.hpp"
#include "balanced/extrapolation.hpp"
#include "balanced/linalg.hpp"

namespace balanced {

std::optional<Measure> find_kernel_witness(const Graph& g, const Measure& mu) {
    auto cert = is_balanced(g, mu);
    if (!cert.balanced)
        throw NotBalancedError("kernel witness is defined for balanced measures");

    const DistanceMatrix& d = g.distances();
    const VertexSet s = mu.support();
    const VertexSet m = max_set(g, mu);
    const auto sv = s.vertices();
    const auto mv = m.vertices();
    const int anchor = mv[0];

    // Homogeneous pair system over the support variables: entries sum to
    // zero and transport costs stay equal across the max-set.
    linalg::Mat a;
    a.emplace_back(sv.size(), Rational(1));
    for (int i : mv) {
        if (i == anchor) continue;
        linalg::Vec row;
        row.reserve(sv.size());
        for (int v : sv) row.emplace_back(d.at(i, v) - d.at(anchor, v));
        a.push_back(std::move(row));
    }
    auto basis = linalg::kernel_basis(a);
    if (basis.empty()) return std::nullopt; // basic

    std::vector<Rational> x(g.n(), Rational(0));
    for (std::size_t j = 0; j < sv.size(); ++j) x[sv[j]] = basis[0][j];

    // Largest step that keeps every strict condition strict: support
    // entries stay positive, and costs off the max-set stay below the
    // common maximum. Take half of the smallest breaking threshold.
    std::optional<Rational> limit;
    auto tighten = [&limit](const Rational& t) {
        if (!limit || t < *limit) limit = t;
    };
    for (int v : sv)
        if (x[v].sign() < 0) tighten(mu[v] / -x[v]);

    CostVector cost_x(g.n(), Rational(0));
    for (int v = 0; v < g.n(); ++v)
        for (int u : sv)
            if (x[u].sign() != 0) cost_x[v] += Rational(d.at(v, u)) * x[u];
    CostVector cost_mu = transport_cost(g, mu);
    for (int w = 0; w < g.n(); ++w) {
        if (m.contains(w)) continue;
        Rational slope = cost_x[anchor] - cost_x[w];
        if (slope.sign() < 0) tighten((cost_mu[anchor] - cost_mu[w]) / -slope);
    }

    // A kernel direction sums to zero and is nonzero, so some support entry
    // decreases and the support threshold above exists.
    if (!limit) throw std::logic_error("kernel direction without a breaking threshold");
    Rational t = *limit / Rational(2);

    std::vector<Rational> w(g.n());
    for (int v = 0; v < g.n(); ++v) w[v] = mu[v] + t * x[v];
    Measure nu{std::move(w)};
    assert(support_max_pair(g, nu) == support_max_pair(g, mu));
    return nu;
}

ClimbResult climb_to_basic(const Graph& g, const Measure& rho) {
    auto cert = is_balanced(g, rho);
    if (!cert.balanced)
        throw NotBalancedError("climb is defined for balanced measures");

    ClimbResult out{rho, {}};
    for (;;) {
        auto witness = find_kernel_witness(g, out.basic);
        if (!witness) return out;
        // Equal pairs satisfy the extrapolation hypotheses; walking past the
        // witness strictly raises the pair, so the loop terminates.
        Extrapolation ext = extrapolate_right({&g, out.basic, *witness});
        out.chain.push_back({*witness, ext.r, ext.lambda_r});
        out.basic = ext.lambda_r;
        if (out.chain.size() > static_cast<std::size_t>(2 * g.n()) + 2)
            throw std::logic_error("climb failed to terminate");
    }
}

namespace {

void merge_part(std::vector<DecompositionPart>& parts, const Rational& coeff,
                const Measure& basic) {
    for (auto& p : parts)
        if (p.basic == basic) {
            p.coeff += coeff;
            return;
        }
    parts.push_back({coeff, basic});
}

} // namespace

Decomposition decompose(const Graph& g, const Measure& rho) {
    auto cert = is_balanced(g, rho);
    if (!cert.balanced)
        throw NotBalancedError("decomposition is defined for balanced measures");

    Decomposition out{rho, {}, {}, false};

    Measure cur = rho;
    while (!is_basic(g, cur)) {
        Measure partner = climb_to_basic(g, cur).basic;
        Extrapolation ext = extrapolate_right({&g, partner, cur});
        out.chain.push_back({cur, partner, ext.r});
        cur = ext.lambda_r;
        // each step strictly raises the pair, so chains stay short
        if (out.chain.size() > static_cast<std::size_t>(2 * g.n()) + 2)
            throw std::logic_error("decomposition chain failed to terminate");
    }

    // Back-substitute rho_j = (1/R_j) rho_{j+1} + ((R_j-1)/R_j) mu_j from the
    // basic tail; coefficients stay strictly positive because every R > 1.
    out.parts.push_back({Rational(1), cur});
    for (auto it = out.chain.rbegin(); it != out.chain.rend(); ++it) {
        Rational shrink = Rational(1) / it->r;
        for (auto& p : out.parts) p.coeff *= shrink;
        merge_part(out.parts, Rational(1) - shrink, it->partner);
    }

    // Validate the contract: positive coefficients summing to 1, every part
    // basic, the part set compatible, and exact reconstruction.
    Rational sum(0);
    std::vector<Rational> recon(g.n(), Rational(0));
    std::vector<Measure> part_measures;
    for (const auto& p : out.parts) {
        if (p.coeff.sign() <= 0) throw std::logic_error("non-positive coefficient");
        if (!is_basic(g, p.basic)) throw std::logic_error("non-basic part");
        sum += p.coeff;
        for (int v = 0; v < g.n(); ++v) recon[v] += p.coeff * p.basic[v];
        part_measures.push_back(p.basic);
    }
    if (sum != Rational(1)) throw std::logic_error("coefficients do not sum to 1");
    if (recon != rho.weights()) throw std::logic_error("reconstruction mismatch");
    if (!is_compatible(g, part_measures)) throw std::logic_error("incompatible parts");
    out.verified = true;
    return out;
}

HullResult hull_membership(const Graph& g, const Measure& mu,
                           const std::vector<Measure>& basis) {
    if (basis.empty()) throw BadParameterError("hull of an empty family");
    for (const auto& b : basis)
        if (b.size() != g.n() || mu.size() != g.n())
            throw DimensionMismatchError("hull measures do not fit the graph");
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (basis[i] == basis[j])
                throw BadParameterError("hull basis measures must be pairwise distinct");

    const int n = g.n();
    const int cols = static_cast<int>(basis.size());
    linalg::Mat a(n + 1, linalg::Vec(cols));
    linalg::Vec b(n + 1);
    for (int v = 0; v < n; ++v) {
        for (int j = 0; j < cols; ++j) a[v][j] = basis[j][v];
        b[v] = mu[v];
    }
    for (int j = 0; j < cols; ++j) a[n][j] = Rational(1);
    b[n] = Rational(1);

    auto feas = linalg::feasible_point(a, b);
    HullResult out;
    out.inside = feas.feasible;
    if (feas.feasible) {
        out.coefficients = std::move(feas.point);
    } else {
        out.certificate = std::move(feas.farkas);
#ifndef NDEBUG
        Rational rb(0);
        for (int i = 0; i <= n; ++i) rb += out.certificate[i] * b[i];
        assert(rb.sign() > 0);
        for (int j = 0; j < cols; ++j) {
            Rational ra(0);
            for (int i = 0; i <= n; ++i) ra += out.certificate[i] * a[i][j];
            assert(ra.sign() <= 0);
        }
#endif
    }
    return out;
}

MinimalityReport check_weak_minimality(const Graph& g, const BasicCatalog& cat) {
    MinimalityReport rep;
    rep.basics_checked = cat.size();
    if (cat.size() < 2) return rep;

    CompatibilityGraph cg = compatibility_graph(cat);
    auto cliques = compatible_cliques(cg, cat.size());
    for (int i = 0; i < cat.size(); ++i) {
        for (const auto& clique : cliques) {
            if (std::find(clique.begin(), clique.end(), i) != clique.end()) continue;
            std::vector<Measure> hull;
            hull.reserve(clique.size());
            for (int j : clique) hull.push_back(cat.entries[j].measure);
            ++rep.hull_checks;
            if (hull_membership(g, cat.entries[i].measure, hull).inside) {
                rep.all_excluded = false;
                rep.failures.emplace_back(i, clique);
            }
        }
    }
    return rep;
}

} // namespace balanced
