#include "balanced/measure.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "balanced/errors.hpp"

namespace balanced {

Measure::Measure(std::vector<Rational> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw BadParameterError("measure needs at least one weight");
    if (w_.size() > 64)
        throw TooLargeError("measures support at most 64 vertices");
    Rational sum(0);
    for (const auto& x : w_) {
        if (x.sign() < 0) throw BadParameterError("negative weight in measure");
        sum += x;
    }
    if (sum != Rational(1))
        throw BadParameterError("measure weights sum to " + sum.str() + ", not 1");
}

Measure Measure::point_mass(int n, int v) {
    std::vector<Rational> w(n, Rational(0));
    w.at(v) = Rational(1);
    return Measure(std::move(w));
}

Measure Measure::uniform(int n) {
    return Measure(std::vector<Rational>(n, Rational(1, n)));
}

Measure Measure::uniform_on(int n, const VertexSet& s) {
    if (s.empty()) throw BadParameterError("uniform_on: empty support");
    std::vector<Rational> w(n, Rational(0));
    for (int v : s.vertices()) w.at(v) = Rational(1, s.size());
    return Measure(std::move(w));
}

VertexSet Measure::support() const {
    VertexSet s;
    for (int v = 0; v < size(); ++v)
        if (w_[v].sign() > 0) s.insert(v);
    return s;
}

std::string Measure::str() const {
    std::ostringstream os;
    os << "(";
    for (int v = 0; v < size(); ++v) {
        if (v) os << ", ";
        os << w_[v];
    }
    os << ")";
    return os.str();
}

PosetOrder poset_compare(const SupportMaxPair& p, const SupportMaxPair& q) {
    const bool p_up = p.support.subset_of(q.support) && p.max_set.superset_of(q.max_set);
    const bool q_up = q.support.subset_of(p.support) && q.max_set.superset_of(p.max_set);
    if (p_up && q_up) return PosetOrder::Equal;
    if (p_up) return PosetOrder::Greater;
    if (q_up) return PosetOrder::Less;
    return PosetOrder::Incomparable;
}

CostVector transport_cost(const Graph& g, const Measure& mu) {
    if (mu.size() != g.n())
        throw DimensionMismatchError("measure has " + std::to_string(mu.size()) +
                                     " entries for a graph on " + std::to_string(g.n()));
    const DistanceMatrix& d = g.distances();
    CostVector costs(g.n(), Rational(0));
    for (int v = 0; v < g.n(); ++v) {
        const int* row = d.row(v);
        Rational acc(0);
        for (int u = 0; u < g.n(); ++u)
            if (mu[u].sign() != 0) acc += Rational(row[u]) * mu[u];
        costs[v] = acc;
    }
    return costs;
}

Rational max_cost(const CostVector& costs) {
    Rational m = costs.at(0);
    for (const auto& c : costs)
        if (c > m) m = c;
    return m;
}

VertexSet max_set(const Graph& g, const Measure& mu) {
    CostVector costs = transport_cost(g, mu);
    Rational m = max_cost(costs);
    VertexSet s;
    for (int v = 0; v < g.n(); ++v)
        if (costs[v] == m) s.insert(v);
    return s;
}

SupportMaxPair support_max_pair(const Graph& g, const Measure& mu) {
    return {mu.support(), max_set(g, mu)};
}

BalanceCertificate is_balanced(const Graph& g, const Measure& mu) {
    CostVector costs = transport_cost(g, mu);
    BalanceCertificate cert;
    cert.max_cost = max_cost(costs);
    for (int v = 0; v < g.n(); ++v) {
        if (mu[v].sign() > 0 && costs[v] != cert.max_cost)
            cert.violations.push_back({v, cert.max_cost - costs[v]});
    }
    cert.balanced = cert.violations.empty();
    return cert;
}

Rational energy(const Graph& g, const Measure& mu) {
    CostVector costs = transport_cost(g, mu);
    Rational e(0);
    for (int v = 0; v < g.n(); ++v)
        if (mu[v].sign() != 0) e += mu[v] * costs[v];
    return e;
}

bool is_compatible(const Graph& g, const std::vector<Measure>& measures) {
    if (measures.empty()) throw BadParameterError("compatibility of an empty family");
    VertexSet support_union;
    VertexSet max_intersection = VertexSet::full(g.n());
    for (const auto& mu : measures) {
        auto cert = is_balanced(g, mu);
        if (!cert.balanced)
            throw NotBalancedError("compatibility is defined for balanced measures; got " +
                                   mu.str());
        support_union = support_union | mu.support();
        max_intersection = max_intersection & max_set(g, mu);
    }
    return support_union.subset_of(max_intersection);
}

Measure convex_combination(const std::vector<Measure>& measures,
                           const std::vector<Rational>& coeffs) {
    if (measures.empty() || measures.size() != coeffs.size())
        throw BadCoefficientsError("coefficient count does not match measure count");
    const int n = measures[0].size();
    Rational sum(0);
    for (const auto& c : coeffs) {
        if (c.sign() < 0) throw BadCoefficientsError("negative coefficient " + c.str());
        sum += c;
    }
    if (sum != Rational(1))
        throw BadCoefficientsError("coefficients sum to " + sum.str() + ", not 1");
    std::vector<Rational> w(n, Rational(0));
    for (std::size_t i = 0; i < measures.size(); ++i) {
        if (measures[i].size() != n)
            throw DimensionMismatchError("measures of different lengths in combination");
        if (coeffs[i].is_zero()) continue;
        for (int v = 0; v < n; ++v)
            if (measures[i][v].sign() != 0) w[v] += coeffs[i] * measures[i][v];
    }
    return Measure(std::move(w));
}

GreedyResult greedy_sequence(const Graph& g, const std::vector<int>& seed, int steps) {
    if (seed.empty()) throw BadParameterError("greedy sequence needs a nonempty seed");
    if (steps < 0) throw BadParameterError("negative step count");
    const int n = g.n();
    const DistanceMatrix& d = g.distances();

    std::vector<long long> count(n, 0);
    std::vector<long long> sumdist(n, 0); // sum of distances to the multiset
    long long total = 0;
    for (int v : seed) {
        if (v < 0 || v >= n) throw BadParameterError("seed vertex out of range");
        ++count[v];
        ++total;
        for (int u = 0; u < n; ++u) sumdist[u] += d.at(u, v);
    }

    auto empirical = [&]() {
        std::vector<Rational> w(n);
        for (int v = 0; v < n; ++v) w[v] = Rational(count[v], total);
        return Measure(std::move(w));
    };

    GreedyResult out{empirical(), {}};
    out.steps.reserve(steps);
    for (int s = 0; s < steps; ++s) {
        int pick = 0;
        for (int v = 1; v < n; ++v)
            if (sumdist[v] > sumdist[pick]) pick = v; // ties keep the lowest index
        ++count[pick];
        ++total;
        for (int u = 0; u < n; ++u) sumdist[u] += d.at(u, pick);
        out.steps.push_back({pick, empirical()});
    }
    return out;
}

bool epsilon_balanced(const Graph& g, const Measure& mu, const Rational& eps) {
    if (eps.sign() < 0) throw BadParameterError("negative tolerance");
    CostVector costs = transport_cost(g, mu);
    Rational m = max_cost(costs);
    for (int v = 0; v < g.n(); ++v)
        if (mu[v].sign() > 0 && m - costs[v] > eps) return false;
    return true;
}

Measure parse_measure(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad measure JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("a measure is a JSON array of fraction strings");
    std::vector<Rational> w;
    w.reserve(j.size());
    for (const auto& cell : j) {
        if (cell.is_string())
            w.push_back(Rational::parse(cell.get<std::string>()));
        else if (cell.is_number_integer())
            w.push_back(Rational(cell.get<long>()));
        else
            throw ParseError("measure entries must be fraction strings or integers");
    }
    return Measure(std::move(w));
}

std::string measure_to_json(const Measure& mu) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& x : mu.weights()) j.push_back(x.str());
    return j.dump();
}

} // namespace balanced
