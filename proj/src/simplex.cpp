#include "lplab/simplex.hpp"

#include "lplab/errors.hpp"

namespace lplab {

namespace {

// Full tableau: rows[r] has ncols coefficient entries plus rhs; the cost row
// holds reduced costs with -objective in its rhs slot.
struct Tableau {
    int m;
    int ncols;
    std::vector<std::vector<Rat>> rows;  // m x (ncols + 1)
    std::vector<Rat> cost;               // ncols + 1
    std::vector<int> basis;              // size m

    void pivot(int pr, int pc) {
        Rat inv = 1 / rows[pr][pc];
        if (inv != 1)
            for (auto& v : rows[pr]) v *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == pr) continue;
            Rat f = rows[r][pc];
            if (f == 0) continue;
            for (int j = 0; j <= ncols; ++j)
                if (rows[pr][j] != 0) rows[r][j] -= f * rows[pr][j];
        }
        Rat f = cost[pc];
        if (f != 0)
            for (int j = 0; j <= ncols; ++j)
                if (rows[pr][j] != 0) cost[j] -= f * rows[pr][j];
        basis[pr] = pc;
    }

    // Bland's rule iteration over columns [0, limit). Returns false when optimal.
    bool step(int limit) {
        int pc = -1;
        for (int j = 0; j < limit; ++j)
            if (cost[j] < 0) {
                pc = j;
                break;
            }
        if (pc < 0) return false;
        int pr = -1;
        Rat best;
        for (int r = 0; r < m; ++r) {
            if (rows[r][pc] <= 0) continue;
            Rat ratio = rows[r][ncols] / rows[r][pc];
            if (pr < 0 || ratio < best || (ratio == best && basis[r] < basis[pr])) {
                pr = r;
                best = ratio;
            }
        }
        if (pr < 0) throw numeric_error("simplex: unbounded objective");
        pivot(pr, pc);
        return true;
    }
};

}  // namespace

LpSolution simplex_solve(const LpProblem& p) {
    const int m = static_cast<int>(p.a.size());
    const int nv = p.nvars;
    for (const auto& row : p.a)
        if (static_cast<int>(row.size()) != nv)
            throw structural_error("simplex: row width mismatch");
    if (static_cast<int>(p.b.size()) != m || static_cast<int>(p.c.size()) != nv)
        throw structural_error("simplex: rhs/objective size mismatch");

    // Columns: [structural nv][slack m][artificial na]
    std::vector<int> art_col(m, -1);
    int na = 0;
    for (int r = 0; r < m; ++r)
        if (p.b[r] < 0) art_col[r] = na++;
    Tableau t;
    t.m = m;
    t.ncols = nv + m + na;
    t.rows.assign(m, std::vector<Rat>(t.ncols + 1, Rat(0)));
    t.basis.assign(m, -1);
    for (int r = 0; r < m; ++r) {
        bool neg = p.b[r] < 0;
        for (int j = 0; j < nv; ++j) t.rows[r][j] = neg ? -p.a[r][j] : p.a[r][j];
        t.rows[r][nv + r] = neg ? Rat(-1) : Rat(1);
        t.rows[r][t.ncols] = neg ? -p.b[r] : p.b[r];
        if (neg) {
            t.rows[r][nv + m + art_col[r]] = 1;
            t.basis[r] = nv + m + art_col[r];
        } else {
            t.basis[r] = nv + r;
        }
    }

    if (na > 0) {
        // Phase 1: minimize the sum of artificials.
        t.cost.assign(t.ncols + 1, Rat(0));
        for (int r = 0; r < m; ++r) {
            if (art_col[r] < 0) continue;
            for (int j = 0; j <= t.ncols; ++j) t.cost[j] -= t.rows[r][j];
        }
        for (int r = 0; r < m; ++r)
            if (art_col[r] >= 0) t.cost[nv + m + art_col[r]] = 0;
        while (t.step(t.ncols)) {
        }
        if (t.cost[t.ncols] != 0) return {LpStatus::Infeasible, Rat(0), {}};
        // Drive remaining artificials out of the basis.
        for (int r = 0; r < m; ++r) {
            if (t.basis[r] < nv + m) continue;
            int pc = -1;
            for (int j = 0; j < nv + m; ++j)
                if (t.rows[r][j] != 0) {
                    pc = j;
                    break;
                }
            if (pc >= 0) t.pivot(r, pc);
            // else: redundant row; leaving the zero-level artificial basic is harmless
            // because its column is never eligible in phase 2.
        }
    }

    // Phase 2 over structural + slack columns only.
    t.cost.assign(t.ncols + 1, Rat(0));
    for (int j = 0; j < nv; ++j) t.cost[j] = p.c[j];
    for (int r = 0; r < m; ++r) {
        if (t.basis[r] >= nv) continue;
        Rat f = t.cost[t.basis[r]];
        if (f == 0) continue;
        for (int j = 0; j <= t.ncols; ++j)
            if (t.rows[r][j] != 0) t.cost[j] -= f * t.rows[r][j];
    }
    while (t.step(nv + m)) {
    }

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.x.assign(nv, Rat(0));
    for (int r = 0; r < m; ++r)
        if (t.basis[r] < nv) sol.x[t.basis[r]] = t.rows[r][t.ncols];
    sol.value = -t.cost[t.ncols];
    return sol;
}

}  // namespace lplab
