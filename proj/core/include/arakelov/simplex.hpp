#pragma once

#include "arakelov/rational.hpp"

#include <vector>

namespace arakelov {

// maximize c.x subject to A x <= b, x >= 0.
struct LinearProgram {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Rational value = 0;
    std::vector<Rational> x;
    int pivots = 0;
};

// Dense two-phase tableau simplex over exact rationals with Bland's rule.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace arakelov
