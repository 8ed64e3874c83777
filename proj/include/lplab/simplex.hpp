#pragma once

#include <vector>

#include "lplab/rational.hpp"

namespace lplab {

/// Standard-form LP: minimize c.x subject to a.x <= b, x >= 0.
struct LpProblem {
    int nvars = 0;
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    std::vector<Rat> c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Optimal;
    Rat value;
    std::vector<Rat> x;  // a basic optimal solution (vertex)
};

/// Two-phase tableau simplex with Bland's anti-cycling rule, exact rationals.
LpSolution simplex_solve(const LpProblem& p);

}  // namespace lplab
