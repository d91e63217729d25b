#pragma once

#include <vector>

#include "ternary/rational.hpp"

namespace ternary {

// Exact linear feasibility: does A x = b admit x >= 0?
//
// Phase-1 simplex over rationals with Bland's rule for both the entering and
// leaving choices, so termination is guaranteed and the answer is a decision,
// not an approximation. Matrices here are dense and small (at most dim+1 rows;
// columns are candidate hull points).
struct FeasibilityResult {
    bool feasible = false;
    // basic solution when feasible; size = number of columns, at most
    // (#rows) entries are nonzero
    std::vector<Rational> solution;
};

class ExactFeasibility {
public:
    // rows: m x k matrix A, rhs: length m. Solves for x >= 0 with A x = b.
    static FeasibilityResult solve(const std::vector<std::vector<Rational>>& a,
                                   const std::vector<Rational>& b);
};

}  // namespace ternary
