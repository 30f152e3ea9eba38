#include "balanced/linalg.hpp"

#include <cassert>
#include <stdexcept>

#include "balanced/errors.hpp"

namespace balanced::linalg {

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

// Clears each row to integers (multiply by the lcm of its denominators).
// Row scaling does not change the solution set of a linear system.
ZMat clear_denominators(const Mat& a, const Vec* rhs) {
    ZMat z(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_class l = 1;
        for (const auto& x : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
        if (rhs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)[i].den().get_mpz_t());
        z[i].reserve(a[i].size() + (rhs ? 1 : 0));
        for (const auto& x : a[i]) z[i].push_back(x.num() * (l / x.den()));
        if (rhs) z[i].push_back((*rhs)[i].num() * (l / (*rhs)[i].den()));
    }
    return z;
}

struct Echelon {
    ZMat m;
    std::vector<std::pair<int, int>> pivots; // (row, col)
};

// Fraction-free forward elimination. Works on the first `cols` columns;
// trailing columns (an augmented rhs) are carried through the row updates
// but never pivoted.
Echelon eliminate(ZMat m, int cols) {
    const int rows = static_cast<int>(m.size());
    Echelon e;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        const int width = static_cast<int>(m[r].size());
        for (int i = r + 1; i < rows; ++i) {
            // Rows with a zero factor still get rescaled; Bareiss's exact
            // divisions at later steps rely on it.
            for (int j = c + 1; j < width; ++j) {
                mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        e.pivots.emplace_back(r, c);
        ++r;
    }
    e.m = std::move(m);
    return e;
}

} // namespace

SolveResult solve(const Mat& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("solve: rhs length mismatch");
    if (a.empty()) return {SolveKind::Underdetermined, {}};
    const int cols = static_cast<int>(a[0].size());

    Echelon e = eliminate(clear_denominators(a, &b), cols);
    const int rank = static_cast<int>(e.pivots.size());
    for (std::size_t i = rank; i < e.m.size(); ++i)
        if (e.m[i][cols] != 0) return {SolveKind::Inconsistent, {}};
    if (rank < cols) return {SolveKind::Underdetermined, {}};

    Vec x(cols, Rational(0));
    for (int j = rank - 1; j >= 0; --j) {
        auto [r, c] = e.pivots[j];
        Rational acc(e.m[r][cols]);
        for (int l = c + 1; l < cols; ++l)
            if (e.m[r][l] != 0) acc -= Rational(e.m[r][l]) * x[l];
        x[c] = acc / Rational(e.m[r][c]);
    }
    return {SolveKind::Unique, std::move(x)};
}

int rank(const Mat& a) {
    if (a.empty()) return 0;
    Echelon e = eliminate(clear_denominators(a, nullptr), static_cast<int>(a[0].size()));
    return static_cast<int>(e.pivots.size());
}

std::vector<Vec> kernel_basis(const Mat& a) {
    if (a.empty()) return {};
    const int cols = static_cast<int>(a[0].size());
    Echelon e = eliminate(clear_denominators(a, nullptr), cols);

    std::vector<int> pivot_of_col(cols, -1);
    for (auto [r, c] : e.pivots) pivot_of_col[c] = r;

    std::vector<Vec> basis;
    for (int f = 0; f < cols; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        Vec x(cols, Rational(0));
        x[f] = Rational(1);
        for (int j = static_cast<int>(e.pivots.size()) - 1; j >= 0; --j) {
            auto [r, c] = e.pivots[j];
            if (c > f) continue; // columns right of f are zero or free-set-to-zero
            Rational acc(0);
            for (int l = c + 1; l < cols; ++l)
                if (e.m[r][l] != 0 && !x[l].is_zero())
                    acc += Rational(e.m[r][l]) * x[l];
            x[c] = -acc / Rational(e.m[r][c]);
        }
        // Scale to a primitive integer vector, first nonzero entry positive.
        mpz_class l = 1;
        for (const auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
        mpz_class g = 0;
        std::vector<mpz_class> ints;
        ints.reserve(cols);
        for (const auto& v : x) {
            ints.push_back(v.num() * (l / v.den()));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
        }
        int sign = 0;
        for (const auto& v : ints)
            if (v != 0) { sign = sgn(v); break; }
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] = Rational(sign < 0 ? mpz_class(-ints[i] / g) : mpz_class(ints[i] / g));
        basis.push_back(std::move(x));
    }
    return basis;
}

Feasibility feasible_point(const Mat& a, const Vec& b) {
    if (a.size() != b.size())
        throw DimensionMismatchError("feasible_point: rhs length mismatch");
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;

    // Tableau over [original vars | artificials | rhs], rows flipped so the
    // rhs is nonnegative; phase-1 minimizes the sum of artificials.
    std::vector<Vec> t(m, Vec(n + m + 1, Rational(0)));
    std::vector<int> flipped(m, 0);
    for (int i = 0; i < m; ++i) {
        flipped[i] = b[i] < Rational(0);
        for (int j = 0; j < n; ++j) t[i][j] = flipped[i] ? -a[i][j] : a[i][j];
        t[i][n + i] = Rational(1);
        t[i][n + m] = flipped[i] ? -b[i] : b[i];
    }

    // Reduced-cost row for basis = artificials: cbar_j = c_j - sum_i t[i][j].
    Vec z(n + m + 1, Rational(0));
    for (int j = 0; j <= n + m; ++j) {
        Rational s(0);
        for (int i = 0; i < m; ++i) s += t[i][j];
        z[j] = (j >= n && j < n + m ? Rational(1) : Rational(0)) - s;
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (z[j] < Rational(0)) { enter = j; break; } // Bland: lowest index
        if (enter < 0) break;

        int leave = -1;
        Rational best(0);
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= Rational(0)) continue;
            Rational ratio = t[i][n + m] / t[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0)
            throw std::logic_error("phase-1 simplex unbounded"); // cannot happen
        Rational piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t[i][enter].is_zero()) continue;
            Rational f = t[i][enter];
            for (int j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        if (!z[enter].is_zero()) {
            Rational f = z[enter];
            for (int j = 0; j <= n + m; ++j) z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    Rational objective = -z[n + m];
    Feasibility out;
    out.feasible = objective.is_zero();
    if (out.feasible) {
        out.point.assign(n, Rational(0));
        for (int i = 0; i < m; ++i)
            if (basis[i] < n) out.point[basis[i]] = t[i][n + m];
    } else {
        // Simplex multipliers: y_k = 1 - cbar(artificial k), mapped back
        // through the row flips. At optimality yᵀa <= 0 and yᵀb = obj > 0.
        out.farkas.assign(m, Rational(0));
        for (int k = 0; k < m; ++k) {
            Rational y = Rational(1) - z[n + k];
            out.farkas[k] = flipped[k] ? -y : y;
        }
    }
    return out;
}

} // namespace balanced::linalg
