#pragma once

#include <vector>

#include "balanced/rational.hpp"

namespace balanced::linalg {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>; // row-major, rectangular

enum class SolveKind { Unique, Underdetermined, Inconsistent };

struct SolveResult {
    SolveKind kind;
    Vec solution; // populated iff kind == Unique
};

// Solves a*x = b exactly. Rows are cleared to integers and eliminated with
// fraction-free (Bareiss) steps; pivots are chosen as the first nonzero
// entry scanning columns left to right and rows top to bottom, so the result
// is deterministic.
SolveResult solve(const Mat& a, const Vec& b);

int rank(const Mat& a);

// Canonical basis of the null space: one vector per free column in
// increasing column order, scaled to a primitive integer vector whose first
// nonzero entry is positive.
std::vector<Vec> kernel_basis(const Mat& a);

// Exact feasibility of {a*x = b, x >= 0} via phase-1 simplex with Bland's
// rule. When infeasible, `farkas` carries y with yᵀa <= 0 componentwise and
// yᵀb > 0.
struct Feasibility {
    bool feasible;
    Vec point;
    Vec farkas;
};
Feasibility feasible_point(const Mat& a, const Vec& b);

} // namespace balanced::linalg
