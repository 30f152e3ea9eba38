#include "balanced/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "balanced/errors.hpp"
#include "balanced/linalg.hpp"

namespace balanced {

namespace {

// ---------------------------------------------------------------------
// Pair-system scanner.
//
// For a fixed max-set candidate M with vertices u_0 < u_1 < ... the system
// rows are [all-ones | 1] and [d(u_r,·) - d(u_0,·) | 0], one per r >= 1,
// restricted to the columns of the chosen support S ⊆ M. The scan walks
// subsets S depth-first in ascending vertex order and keeps a fraction-free
// (Bareiss) elimination state per level, so shared prefixes share work and
// a column that is linearly dependent on the current selection prunes its
// entire subtree: supersets cannot have a unique solution either.
// ---------------------------------------------------------------------

struct Overflow {};

// Machine-integer arithmetic for the elimination, with magnitudes kept
// below 2^62 so the three-term Bareiss update fits in __int128.
struct I64Ops {
    using Int = long long;
    static constexpr Int kLimit = 1LL << 62;

    static Int update(Int piv, Int a, Int f, Int b, Int prev) {
        __int128 t = static_cast<__int128>(piv) * a - static_cast<__int128>(f) * b;
        __int128 q = t / prev; // exact by the Bareiss minor identity
        assert(t % prev == 0);
        if (q >= kLimit || q <= -kLimit) throw Overflow{};
        return static_cast<Int>(q);
    }
    static bool is_zero(Int v) { return v == 0; }
    static Rational to_rational(Int v) { return Rational(static_cast<long>(v)); }
};

struct MpzOps {
    using Int = mpz_class;

    static Int update(const Int& piv, const Int& a, const Int& f, const Int& b,
                      const Int& prev) {
        Int t = piv * a - f * b;
        Int q;
        mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        return q;
    }
    static bool is_zero(const Int& v) { return sgn(v) == 0; }
    static Rational to_rational(const Int& v) { return Rational(v); }
};

template <class Ops>
class PairScanner {
    using Int = typename Ops::Int;

public:
    PairScanner(const Graph& g, std::vector<CatalogEntry>& out)
        : g_(g), d_(g.distances()), n_(g.n()), out_(out) {
        const std::size_t levels = n_ + 1;
        cols_.resize(levels);
        rhs_.resize(levels);
        pivot_col_.resize(levels);
        for (auto& v : cols_) v.resize(static_cast<std::size_t>(n_) * n_);
        for (auto& v : rhs_) v.resize(n_);
        for (auto& v : pivot_col_) v.resize(n_);
        pivot_val_.resize(levels);
        pivot_row_.resize(levels);
        pivot_vertex_.resize(levels);
        row_used_.assign(n_, 0);
    }

    void scan(std::uint64_t m_mask) {
        verts_ = VertexSet(m_mask).vertices();
        m_ = static_cast<int>(verts_.size());
        m_mask_ = m_mask;

        // Base state: column p holds the system column of vertex verts_[p].
        Int* cols = cols_[0].data();
        for (int p = 0; p < m_; ++p) {
            Int* col = cols + static_cast<std::size_t>(p) * m_;
            col[0] = 1;
            for (int r = 1; r < m_; ++r)
                col[r] = d_.at(verts_[r], verts_[p]) - d_.at(verts_[0], verts_[p]);
        }
        rhs_[0][0] = 1;
        for (int r = 1; r < m_; ++r) rhs_[0][r] = 0;
        std::fill(row_used_.begin(), row_used_.end(), 0);

        descend(0, 0);
    }

private:
    void descend(int pos, int k) {
        const Int* cols = cols_[k].data();
        const Int prev = k == 0 ? Int(1) : pivot_val_[k - 1];
        for (int p = pos; p < m_; ++p) {
            const Int* col = cols + static_cast<std::size_t>(p) * m_;
            int pr = -1;
            for (int r = 0; r < m_; ++r)
                if (!row_used_[r] && !Ops::is_zero(col[r])) { pr = r; break; }
            if (pr < 0) continue; // dependent column: prune every superset

            const Int piv = col[pr];
            std::copy(col, col + m_, pivot_col_[k].begin());
            pivot_row_[k] = pr;
            pivot_vertex_[k] = verts_[p];
            pivot_val_[k] = piv;
            row_used_[pr] = 1;

            // Transform rhs and the columns after p into the next level.
            Int* ncols = cols_[k + 1].data();
            for (int q = p + 1; q < m_; ++q) {
                const Int* src = cols + static_cast<std::size_t>(q) * m_;
                Int* dst = ncols + static_cast<std::size_t>(q) * m_;
                for (int r = 0; r < m_; ++r)
                    dst[r] = row_used_[r] ? src[r]
                                          : Ops::update(piv, src[r], col[r], src[pr], prev);
            }
            for (int r = 0; r < m_; ++r)
                rhs_[k + 1][r] = row_used_[r]
                                     ? rhs_[k][r]
                                     : Ops::update(piv, rhs_[k][r], col[r], rhs_[k][pr], prev);

            emit_if_solution(k + 1);
            descend(p + 1, k + 1);

            row_used_[pr] = 0;
        }
    }

    // The current selection has full column rank by construction; a
    // candidate exists iff the reduced rhs vanishes on every active row.
    void emit_if_solution(int k) {
        const auto& rhs = rhs_[k];
        for (int r = 0; r < m_; ++r)
            if (!row_used_[r] && !Ops::is_zero(rhs[r])) return;

        // Back-substitute the frozen upper-triangular rows.
        std::vector<Rational> x(k);
        for (int j = k - 1; j >= 0; --j) {
            Rational acc = Ops::to_rational(rhs[pivot_row_[j]]);
            for (int l = j + 1; l < k; ++l)
                acc -= Ops::to_rational(pivot_col_[l][pivot_row_[j]]) * x[l];
            x[j] = acc / Ops::to_rational(pivot_col_[j][pivot_row_[j]]);
            if (x[j].sign() <= 0) return; // support would differ from S
        }

        // Costs: equal across M by construction; must be strictly smaller
        // everywhere else for M to be the exact max-set.
        std::vector<Rational> weights(n_, Rational(0));
        for (int j = 0; j < k; ++j) weights[pivot_vertex_[j]] = x[j];
        Rational anchor_cost(0);
        for (int j = 0; j < k; ++j)
            anchor_cost += Rational(d_.at(verts_[0], pivot_vertex_[j])) * x[j];
        for (int v = 0; v < n_; ++v) {
            if ((m_mask_ >> v) & 1ULL) continue;
            Rational c(0);
            for (int j = 0; j < k; ++j)
                c += Rational(d_.at(v, pivot_vertex_[j])) * x[j];
            if (c >= anchor_cost) return;
        }

        VertexSet s;
        for (int j = 0; j < k; ++j) s.insert(pivot_vertex_[j]);
        out_.push_back({Measure(std::move(weights)), {s, VertexSet(m_mask_)}});
    }

    const Graph& g_;
    const DistanceMatrix& d_;
    int n_;
    std::vector<CatalogEntry>& out_;

    std::vector<int> verts_;
    int m_ = 0;
    std::uint64_t m_mask_ = 0;

    std::vector<std::vector<Int>> cols_;
    std::vector<std::vector<Int>> rhs_;
    std::vector<std::vector<Int>> pivot_col_;
    std::vector<Int> pivot_val_;
    std::vector<int> pivot_row_;
    std::vector<int> pivot_vertex_;
    std::vector<char> row_used_;
};

} // namespace

std::optional<Measure> solve_pair(const Graph& g, const VertexSet& s, const VertexSet& m) {
    const int n = g.n();
    if (s.empty() || !s.subset_of(m) || !m.subset_of(VertexSet::full(n)))
        throw BadSubsetsError("need a nonempty S with S ⊆ M ⊆ V");

    const DistanceMatrix& d = g.distances();
    const auto sv = s.vertices();
    const auto mv = m.vertices();
    const int anchor = mv[0];

    linalg::Mat a;
    linalg::Vec b;
    a.emplace_back(sv.size(), Rational(1));
    b.emplace_back(1);
    for (int i : mv) {
        if (i == anchor) continue;
        linalg::Vec row;
        row.reserve(sv.size());
        for (int v : sv) row.emplace_back(d.at(i, v) - d.at(anchor, v));
        a.push_back(std::move(row));
        b.emplace_back(0);
    }

    auto res = linalg::solve(a, b);
    if (res.kind != linalg::SolveKind::Unique) return std::nullopt;

    std::vector<Rational> w(n, Rational(0));
    for (std::size_t j = 0; j < sv.size(); ++j) {
        if (res.solution[j].sign() <= 0) return std::nullopt;
        w[sv[j]] = res.solution[j];
    }
    Measure mu{std::move(w)};

    CostVector costs = transport_cost(g, mu);
    for (int v = 0; v < n; ++v) {
        if (m.contains(v)) {
            assert(costs[v] == costs[anchor]);
        } else if (costs[v] >= costs[anchor]) {
            return std::nullopt;
        }
    }
    return mu;
}

int enumeration_cap() {
    if (const char* env = std::getenv("BALANCED_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 16;
}

BasicCatalog enumerate_basic(const Graph& g, int max_n) {
    const int cap = max_n > 0 ? max_n : enumeration_cap();
    const int n = g.n();
    if (n > cap)
        throw TooLargeError("graph has " + std::to_string(n) +
                            " vertices; enumeration cap is " + std::to_string(cap));
    if (n > 62) throw TooLargeError("enumeration supports at most 62 vertices");

    BasicCatalog cat;
    cat.n = n;

    // BALANCED_EXACT_SCAN routes everything through the big-integer scanner;
    // normally it only serves as the overflow fallback.
    const bool force_exact = std::getenv("BALANCED_EXACT_SCAN") != nullptr;
    PairScanner<I64Ops> fast(g, cat.entries);
    std::unique_ptr<PairScanner<MpzOps>> exact; // built on first overflow
    if (force_exact) exact = std::make_unique<PairScanner<MpzOps>>(g, cat.entries);
    for (std::uint64_t m = 1; m < (1ULL << n); ++m) {
        if (force_exact) {
            exact->scan(m);
            continue;
        }
        const std::size_t before = cat.entries.size();
        try {
            fast.scan(m);
        } catch (const Overflow&) {
            // drop partial output and redo this max-set candidate exactly
            cat.entries.erase(cat.entries.begin() + before, cat.entries.end());
            if (!exact) exact = std::make_unique<PairScanner<MpzOps>>(g, cat.entries);
            exact->scan(m);
        }
    }

    std::sort(cat.entries.begin(), cat.entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) {
                  if (a.pair.support.size() != b.pair.support.size())
                      return a.pair.support.size() < b.pair.support.size();
                  if (a.pair.support != b.pair.support)
                      return a.pair.support < b.pair.support;
                  return a.pair.max_set < b.pair.max_set;
              });
    for (std::size_t i = 1; i < cat.entries.size(); ++i)
        if (cat.entries[i].measure == cat.entries[i - 1].measure)
            throw std::logic_error("duplicate catalog entry");
    return cat;
}

std::optional<int> BasicCatalog::index_of(const Measure& mu) const {
    for (int i = 0; i < size(); ++i)
        if (entries[i].measure == mu) return i;
    return std::nullopt;
}

bool is_basic(const Graph& g, const Measure& mu) {
    auto cert = is_balanced(g, mu);
    if (!cert.balanced)
        throw NotBalancedError("basicness is defined for balanced measures");

    const DistanceMatrix& d = g.distances();
    const auto sv = mu.support().vertices();
    const auto mv = max_set(g, mu).vertices();
    const int anchor = mv[0];

    linalg::Mat a;
    a.emplace_back(sv.size(), Rational(1));
    for (int i : mv) {
        if (i == anchor) continue;
        linalg::Vec row;
        row.reserve(sv.size());
        for (int v : sv) row.emplace_back(d.at(i, v) - d.at(anchor, v));
        a.push_back(std::move(row));
    }
    return linalg::rank(a) == static_cast<int>(sv.size());
}

CompatibilityGraph compatibility_graph(const BasicCatalog& cat) {
    CompatibilityGraph cg;
    cg.count = cat.size();
    cg.adj.assign(static_cast<std::size_t>(cg.count) * cg.count, 0);
    for (int i = 0; i < cg.count; ++i)
        for (int j = i + 1; j < cg.count; ++j) {
            const auto& p = cat.entries[i].pair;
            const auto& q = cat.entries[j].pair;
            bool compatible = (p.support | q.support).subset_of(p.max_set & q.max_set);
            cg.adj[static_cast<std::size_t>(i) * cg.count + j] = compatible;
            cg.adj[static_cast<std::size_t>(j) * cg.count + i] = compatible;
        }
    return cg;
}

std::vector<std::pair<int, int>> CompatibilityGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

namespace {

void extend_clique(const CompatibilityGraph& cg, int upto, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == upto) return;
    const int from = cur.empty() ? 0 : cur.back() + 1;
    for (int v = from; v < cg.count; ++v) {
        bool ok = true;
        for (int u : cur)
            if (!cg.adjacent(u, v)) { ok = false; break; }
        if (!ok) continue;
        cur.push_back(v);
        out.push_back(cur);
        extend_clique(cg, upto, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> compatible_cliques(const CompatibilityGraph& cg, int upto) {
    if (upto < 1) throw BadParameterError("clique size bound must be at least 1");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    extend_clique(cg, upto, cur, out);
    return out;
}

int count_components(const CompatibilityGraph& cg) {
    std::vector<int> parent(cg.count);
    for (int i = 0; i < cg.count; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < cg.count; ++i)
        for (int j = i + 1; j < cg.count; ++j)
            if (cg.adjacent(i, j)) parent[find(i)] = find(j);
    int components = 0;
    for (int i = 0; i < cg.count; ++i) components += find(i) == i;
    return components;
}

BoundsReport check_bounds(const Graph& g, const BasicCatalog& cat,
                          std::optional<int> join_family_triples) {
    BoundsReport rep;
    rep.count = cat.size();
    rep.upper_bound = (mpz_class(1) << (2 * g.n())) - 1;
    rep.upper_ok = mpz_class(static_cast<long>(rep.count)) <= rep.upper_bound;
    if (join_family_triples)
        rep.join_family_exact = rep.count == (1LL << *join_family_triples) - 1;
    return rep;
}

std::string catalog_to_json(const BasicCatalog& cat, int indent) {
    nlohmann::json j;
    j["n"] = cat.n;
    j["count"] = cat.size();
    auto basics = nlohmann::json::array();
    for (const auto& e : cat.entries) {
        nlohmann::json entry;
        entry["mu"] = to_fraction_strings(e.measure.weights());
        entry["support"] = e.pair.support.vertices();
        entry["max_set"] = e.pair.max_set.vertices();
        basics.push_back(entry);
    }
    j["basics"] = basics;
    return j.dump(indent);
}

std::string compatibility_to_dot(const BasicCatalog& cat, const CompatibilityGraph& cg) {
    std::ostringstream out;
    out << "graph compatibility {\n";
    for (int i = 0; i < cg.count; ++i) {
        out << "  " << i << " [label=\"";
        const auto& w = cat.entries[i].measure.weights();
        for (std::size_t v = 0; v < w.size(); ++v) {
            if (v) out << ",";
            out << w[v];
        }
        out << "\"];\n";
    }
    for (auto [i, j] : cg.edges()) out << "  " << i << " -- " << j << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace balanced
