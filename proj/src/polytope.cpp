#include "lplab/polytope.hpp"

#include <algorithm>
#include <bitset>
#include <map>

#include "lplab/errors.hpp"
#include "lplab/gf2.hpp"

namespace lplab {

bool Polytope::contains(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != n) return false;
    for (size_t r = 0; r < a.size(); ++r) {
        Rat lhs(0);
        for (int i = 0; i < n; ++i)
            if (a[r][i] != 0) lhs += a[r][i] * x[i];
        if (lhs > b[r]) return false;
    }
    return true;
}

Polytope build_fundamental_polytope(const TannerGraph& g) {
    const int n = g.num_vars();
    Polytope p;
    p.n = n;
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> lo(n, Rat(0)), hi(n, Rat(0));
        lo[i] = -1;
        hi[i] = 1;
        p.a.push_back(std::move(lo));
        p.b.push_back(Rat(0));
        p.a.push_back(std::move(hi));
        p.b.push_back(Rat(1));
    }
    for (int j = 0; j < g.num_checks(); ++j) {
        const auto& nbrs = g.check_neighbors(j);
        int d = static_cast<int>(nbrs.size());
        if (d > 14)
            throw capacity_error("check degree " + std::to_string(d) +
                                 " exceeds the parity cut limit of 14");
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            if (std::popcount(mask) % 2 == 0) continue;
            std::vector<Rat> row(n, Rat(0));
            int odd = 0;
            for (int t = 0; t < d; ++t) {
                if (mask >> t & 1) {
                    row[nbrs[t]] = 1;
                    ++odd;
                } else {
                    row[nbrs[t]] = -1;
                }
            }
            p.a.push_back(std::move(row));
            p.b.push_back(Rat(odd - 1));
        }
    }
    return p;
}

LpSolution minimize_over(const Polytope& p, const LlrVector& c) {
    if (static_cast<int>(c.size()) != p.n)
        throw structural_error("objective length does not match polytope dimension");
    LpProblem lp;
    lp.nvars = p.n;
    lp.a = p.a;
    lp.b = p.b;
    lp.c = c;
    return simplex_solve(lp);
}

DecodeResult lp_decode_polytope(const Polytope& p, const LlrVector& gamma) {
    DecodeResult res;
    auto first = minimize_over(p, gamma);
    if (first.status != LpStatus::Optimal)
        throw numeric_error("decode LP was not solvable");  // P always contains 0
    res.optimum = first.value;
    if (first.value != 0) {
        res.success = false;
        res.reason = DecodeResult::Reason::NonzeroOptimum;
        res.certificate = first.x;
        return res;
    }
    // Optimal value is 0; zero must be the unique optimum. Maximize the
    // coordinate sum over the optimal face.
    Polytope face = p;
    face.a.push_back(gamma);
    face.b.push_back(Rat(0));
    LlrVector neg_sum(p.n, Rat(-1));
    auto second = minimize_over(face, neg_sum);
    if (second.status != LpStatus::Optimal)
        throw numeric_error("optimal-face LP was not solvable");
    if (second.value != 0) {
        res.success = false;
        res.reason = DecodeResult::Reason::ZeroNotUnique;
        res.certificate = second.x;
        return res;
    }
    res.success = true;
    return res;
}

DecodeResult lp_decode(const TannerGraph& g, const LlrVector& gamma) {
    return lp_decode_polytope(build_fundamental_polytope(g), gamma);
}

MlResult ml_decode(const TannerGraph& g, const LlrVector& gamma) {
    const int n = g.num_vars();
    if (static_cast<int>(gamma.size()) != n)
        throw structural_error("cost vector length does not match graph");
    require_cap(n, 24, "ml_decode variable count");
    std::vector<BitVector> rows;
    rows.reserve(g.num_checks());
    for (int j = 0; j < g.num_checks(); ++j) rows.push_back(g.check(j));
    auto basis = nullspace_basis_gf2(rows, n);
    const int k = static_cast<int>(basis.size());

    MlResult res;
    res.optimum = Rat(0);
    res.minimizers.push_back(BitVector(n));
    BitVector x(n);
    Rat cost(0);
    // Gray-code walk over the codeword set; each step XORs one basis word.
    for (uint64_t code = 1; code < (uint64_t(1) << k); ++code) {
        int t = std::countr_zero(code);
        for (int i : basis[t].ones()) {
            x.flip(i);
            if (x.get(i))
                cost += gamma[i];
            else
                cost -= gamma[i];
        }
        if (cost < res.optimum) {
            res.optimum = cost;
            res.minimizers.clear();
            res.minimizers.push_back(x);
        } else if (cost == res.optimum) {
            res.minimizers.push_back(x);
        }
    }
    std::sort(res.minimizers.begin(), res.minimizers.end());
    return res;
}

namespace {

constexpr int kMaxRows = 200;
using ActiveSet = std::bitset<kMaxRows>;

struct DdVertex {
    Pseudocodeword x;
    ActiveSet active;  // w.r.t. the rows processed so far
};

ActiveSet recompute_active(const Polytope& p, const Pseudocodeword& x, int nrows) {
    ActiveSet act;
    for (int r = 0; r < nrows; ++r) {
        Rat lhs(0);
        for (int i = 0; i < p.n; ++i)
            if (p.a[r][i] != 0) lhs += p.a[r][i] * x[i];
        if (lhs == p.b[r]) act.set(r);
    }
    return act;
}

}  // namespace

std::vector<Pseudocodeword> enumerate_vertices(const Polytope& p) {
    const int n = p.n;
    require_cap(n, 12, "vertex enumeration dimension");
    const int nrows = static_cast<int>(p.a.size());
    require_cap(nrows, kMaxRows, "vertex enumeration inequality count");

    // Rows 0..2n-1 are the box; seed with all 0/1 points and refine.
    std::vector<DdVertex> verts;
    verts.reserve(size_t(1) << n);
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        DdVertex v;
        v.x.assign(n, Rat(0));
        for (int i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                v.x[i] = 1;
                v.active.set(2 * i + 1);
            } else {
                v.active.set(2 * i);
            }
        }
        verts.push_back(std::move(v));
    }

    for (int r = 2 * n; r < nrows; ++r) {
        std::vector<Rat> slack(verts.size());
        bool any_neg = false;
        for (size_t v = 0; v < verts.size(); ++v) {
            Rat lhs(0);
            for (int i = 0; i < n; ++i)
                if (p.a[r][i] != 0) lhs += p.a[r][i] * verts[v].x[i];
            slack[v] = p.b[r] - lhs;
            if (slack[v] < 0) any_neg = true;
        }
        if (!any_neg) {
            for (size_t v = 0; v < verts.size(); ++v)
                if (slack[v] == 0) verts[v].active.set(r);
            continue;
        }
        std::vector<size_t> pos, neg;
        for (size_t v = 0; v < verts.size(); ++v) {
            if (slack[v] > 0) pos.push_back(v);
            if (slack[v] < 0) neg.push_back(v);
        }
        std::vector<DdVertex> next;
        std::map<Pseudocodeword, bool> seen;
        for (size_t v = 0; v < verts.size(); ++v)
            if (slack[v] >= 0) {
                DdVertex kept = verts[v];
                if (slack[v] == 0) kept.active.set(r);
                seen[kept.x] = true;
                next.push_back(std::move(kept));
            }
        for (size_t u : pos)
            for (size_t w : neg) {
                ActiveSet z = verts[u].active & verts[w].active;
                if (static_cast<int>(z.count()) < n - 1) continue;
                // u,w are adjacent iff no other current vertex lies on the
                // face their common active rows define.
                bool adjacent = true;
                for (size_t o = 0; o < verts.size(); ++o) {
                    if (o == u || o == w) continue;
                    if ((z & ~verts[o].active).none()) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                Rat lam = slack[u] / (slack[u] - slack[w]);
                DdVertex cut;
                cut.x.resize(n);
                for (int i = 0; i < n; ++i)
                    cut.x[i] = verts[u].x[i] + lam * (verts[w].x[i] - verts[u].x[i]);
                if (seen.count(cut.x)) continue;
                seen[cut.x] = true;
                cut.active = recompute_active(p, cut.x, r + 1);
                next.push_back(std::move(cut));
            }
        verts = std::move(next);
        if (verts.empty()) break;
    }

    std::vector<Pseudocodeword> out;
    out.reserve(verts.size());
    for (auto& v : verts) out.push_back(std::move(v.x));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Descending prefix sums of a vertex's coordinates.
std::vector<Rat> sorted_prefix(const Pseudocodeword& x) {
    std::vector<Rat> s(x);
    std::sort(s.begin(), s.end(), std::greater<Rat>());
    for (size_t i = 1; i < s.size(); ++i) s[i] += s[i - 1];
    return s;
}

}  // namespace

PseudoweightResult bsc_pseudoweight(const std::vector<Pseudocodeword>& vertices) {
    PseudoweightResult res;
    res.infinite = true;
    int best_a = -1;
    for (const auto& x : vertices) {
        bool nonzero = false;
        for (const auto& c : x)
            if (c != 0) nonzero = true;
        if (!nonzero) continue;
        res.infinite = false;
        auto pre = sorted_prefix(x);
        Rat half = pre.back() / 2;
        int a = 0;
        while (a < static_cast<int>(pre.size()) && pre[a] < half) ++a;
        // a is now the largest count whose top sum stays below half the total
        if (best_a < 0 || a < best_a) best_a = a;
    }
    if (!res.infinite) res.value = 2 * best_a;
    return res;
}

Rat strength_ratio(const std::vector<Pseudocodeword>& vertices, int alpha_count) {
    if (alpha_count < 0) throw structural_error("alpha_count must be nonnegative");
    bool found = false;
    Rat best(0);
    for (const auto& x : vertices) {
        bool nonzero = false;
        for (const auto& c : x)
            if (c != 0) nonzero = true;
        if (!nonzero) continue;
        auto pre = sorted_prefix(x);
        int k = std::min<int>(alpha_count, static_cast<int>(pre.size()));
        Rat top = k == 0 ? Rat(0) : pre[k - 1];
        Rat ratio = top / pre.back();
        if (!found || ratio > best) {
            best = ratio;
            found = true;
        }
    }
    if (!found) throw structural_error("strength ratio needs a nonzero vertex");
    return best;
}

}  // namespace lplab
