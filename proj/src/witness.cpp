#include "lplab/witness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lplab/errors.hpp"
#include "lplab/simplex.hpp"

namespace lplab {

EdgeWeighting zero_weighting(const TannerGraph& g) {
    EdgeWeighting w;
    w.n = g.num_vars();
    w.m = g.num_checks();
    return w;
}

namespace {

void check_shape(const TannerGraph& g, const EdgeWeighting& w) {
    if (w.n != g.num_vars() || w.m != g.num_checks())
        throw structural_error("edge weighting does not match the graph shape");
    for (const auto& [e, v] : w.w)
        if (!g.has_edge(e.first, e.second))
            throw structural_error("edge weighting keys a non-edge");
}

}  // namespace

Rat flow(const TannerGraph& g, const EdgeWeighting& w, int i) {
    Rat f(0);
    for (int j : g.var_neighbors(i)) f += w.get(i, j);
    return f;
}

Rat inflow(const TannerGraph& g, const EdgeWeighting& w, int i) {
    Rat f(0);
    for (int j : g.var_neighbors(i)) {
        Rat v = w.get(i, j);
        if (v < 0) f -= v;
    }
    return f;
}

Rat outflow(const TannerGraph& g, const EdgeWeighting& w, int i) {
    Rat f(0);
    for (int j : g.var_neighbors(i)) {
        Rat v = w.get(i, j);
        if (v > 0) f += v;
    }
    return f;
}

WitnessReport verify_dual_witness(const TannerGraph& g, const LlrVector& gamma,
                                  const EdgeWeighting& w) {
    check_shape(g, w);
    if (static_cast<int>(gamma.size()) != g.num_vars())
        throw structural_error("llr length does not match the graph");
    WitnessReport rep;
    for (int i = 0; i < g.num_vars(); ++i)
        if (!(flow(g, w, i) < gamma[i]))
            rep.violations.push_back({WitnessViolation::Kind::VariableFlow, i, -1, -1});
    for (int j = 0; j < g.num_checks(); ++j) {
        const auto& nbrs = g.check_neighbors(j);
        for (size_t a = 0; a < nbrs.size(); ++a)
            for (size_t b = a + 1; b < nbrs.size(); ++b)
                if (w.get(nbrs[a], j) + w.get(nbrs[b], j) < 0)
                    rep.violations.push_back(
                        {WitnessViolation::Kind::CheckPair, nbrs[a], j, nbrs[b]});
    }
    rep.valid = rep.violations.empty();
    return rep;
}

bool verify_hyperflow(const TannerGraph& g, const LlrVector& gamma, const EdgeWeighting& w) {
    auto rep = verify_dual_witness(g, gamma, w);
    if (!rep.valid) return false;
    for (int j = 0; j < g.num_checks(); ++j) {
        const auto& nbrs = g.check_neighbors(j);
        Rat p(0);
        int sinks = 0;
        for (int i : nbrs) {
            Rat v = w.get(i, j);
            if (v < 0) {
                ++sinks;
                p = -v;
            }
        }
        bool active = false;
        for (int i : nbrs)
            if (w.get(i, j) != 0) active = true;
        if (!active) continue;
        if (sinks != 1) return false;
        for (int i : nbrs) {
            Rat v = w.get(i, j);
            if (v > 0 && v != p) return false;
            if (v == 0) return false;  // every edge of an active check carries +/-P
        }
    }
    return true;
}

bool wdg_acyclic(const TannerGraph& g, const EdgeWeighting& w) {
    // Nodes: variables 0..n-1, checks n..n+m-1; Kahn's algorithm.
    const int n = g.num_vars(), m = g.num_checks();
    std::vector<std::vector<int>> out(n + m);
    std::vector<int> indeg(n + m, 0);
    for (const auto& [e, v] : w.w) {
        if (v == 0) continue;
        int from = v > 0 ? e.first : n + e.second;
        int to = v > 0 ? n + e.second : e.first;
        out[from].push_back(to);
        ++indeg[to];
    }
    std::vector<int> stack;
    for (int u = 0; u < n + m; ++u)
        if (indeg[u] == 0) stack.push_back(u);
    int seen = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++seen;
        for (int v : out[u])
            if (--indeg[v] == 0) stack.push_back(v);
    }
    return seen == n + m;
}

bool is_primitive(const TannerGraph& g, const LlrVector& gamma, const EdgeWeighting& w) {
    if (!verify_hyperflow(g, gamma, w)) return false;
    for (int i = 0; i < g.num_vars(); ++i) {
        if (gamma[i] <= 0 && outflow(g, w, i) != 0) return false;
        if (gamma[i] > 0 && inflow(g, w, i) != 0) return false;
    }
    if (!wdg_acyclic(g, w))
        throw std::logic_error("primitive hyperflow with a cyclic WDG");
    return true;
}

namespace {

Rat llr_scale(const LlrVector& gamma) {
    Rat s(0);
    for (const auto& v : gamma) s += abs(v);
    return std::max(Rat(1), s);
}

// Shared body of the full and support-restricted witness searches. Edge
// weights are shifted by +B so the LP is in standard nonnegative form; the
// slack variable t encodes s = t - S where s is the strictness margin.
WitnessSearch witness_lp(const TannerGraph& g, const LlrVector& gamma,
                         const std::vector<std::pair<int, int>>& edges) {
    const int n = g.num_vars();
    Rat s_shift = llr_scale(gamma);
    Rat box(0);
    for (const auto& v : gamma) box += abs(v);
    box += 1;  // B

    const int ne = static_cast<int>(edges.size());
    std::map<std::pair<int, int>, int> idx;
    for (int e = 0; e < ne; ++e) idx[edges[e]] = e;

    LpProblem lp;
    lp.nvars = ne + 1;  // u_0..u_{ne-1}, t
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> row(lp.nvars, Rat(0));
        int deg = 0;
        for (int j : g.var_neighbors(i)) {
            auto it = idx.find({i, j});
            if (it == idx.end()) continue;
            row[it->second] = 1;
            ++deg;
        }
        row[ne] = 1;
        lp.a.push_back(std::move(row));
        lp.b.push_back(gamma[i] + box * deg + s_shift);
    }
    std::set<int> touched;
    for (const auto& e : edges) touched.insert(e.second);
    for (int j : touched) {
        const auto& nbrs = g.check_neighbors(j);
        for (size_t a = 0; a < nbrs.size(); ++a)
            for (size_t b = a + 1; b < nbrs.size(); ++b) {
                std::vector<Rat> row(lp.nvars, Rat(0));
                int free_edges = 0;
                auto ia = idx.find({nbrs[a], j});
                auto ib = idx.find({nbrs[b], j});
                // w = u - B for free edges, 0 for pinned ones, so the pair
                // rule w_a + w_b >= 0 becomes -sum(u) <= -(#free)*B.
                if (ia != idx.end()) {
                    row[ia->second] = -1;
                    ++free_edges;
                }
                if (ib != idx.end()) {
                    row[ib->second] = -1;
                    ++free_edges;
                }
                if (free_edges == 0) continue;
                lp.a.push_back(std::move(row));
                lp.b.push_back(-Rat(free_edges) * box);
            }
    }
    for (int e = 0; e < ne; ++e) {
        std::vector<Rat> row(lp.nvars, Rat(0));
        row[e] = 1;
        lp.a.push_back(std::move(row));
        lp.b.push_back(2 * box);
    }
    lp.c.assign(lp.nvars, Rat(0));
    lp.c[ne] = -1;

    auto sol = simplex_solve(lp);
    if (sol.status != LpStatus::Optimal)
        throw numeric_error("witness LP did not solve");
    WitnessSearch res;
    res.slack = sol.x[ne] - s_shift;
    res.found = res.slack > 0;
    if (res.found) {
        res.w.n = n;
        res.w.m = g.num_checks();
        for (int e = 0; e < ne; ++e) res.w.set(edges[e].first, edges[e].second, sol.x[e] - box);
    }
    return res;
}

}  // namespace

WitnessSearch find_dual_witness(const TannerGraph& g, const LlrVector& gamma) {
    if (static_cast<int>(gamma.size()) != g.num_vars())
        throw structural_error("llr length does not match the graph");
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < g.num_checks(); ++j)
        for (int i : g.check_neighbors(j)) edges.push_back({i, j});
    return witness_lp(g, gamma, edges);
}

WitnessSearch find_narrow_dual_witness(const TannerGraph& g, const BitVector& y) {
    if (static_cast<int>(y.size()) != g.num_vars())
        throw structural_error("received word length does not match the graph");
    std::set<int> active_checks;
    for (int i : y.ones())
        for (int j : g.var_neighbors(i)) active_checks.insert(j);
    std::vector<std::pair<int, int>> edges;
    for (int j : active_checks)
        for (int i : g.check_neighbors(j)) edges.push_back({i, j});
    LlrVector gamma;
    for (int i = 0; i < g.num_vars(); ++i) gamma.push_back(y.get(i) ? Rat(-1) : Rat(1));
    return witness_lp(g, gamma, edges);
}

HyperflowSearch find_hyperflow(const TannerGraph& g, const LlrVector& gamma,
                               bool require_acyclic) {
    const int n = g.num_vars(), m = g.num_checks();
    if (static_cast<int>(gamma.size()) != n)
        throw structural_error("llr length does not match the graph");
    unsigned long long total = 1;
    for (int j = 0; j < m; ++j) {
        total *= static_cast<unsigned long long>(g.check_degree(j)) + 1;
        require_cap(static_cast<long long>(total), 1000000, "hyperflow sink-assignment count");
    }

    Rat s_shift = llr_scale(gamma);
    Rat box(0);
    for (const auto& v : gamma) box += abs(v);
    box += 1;

    std::vector<int> digit(m, 0);  // 0 = inert, t >= 1 = sink is N(j)[t-1]
    std::vector<bool> must_sink(n, false);
    for (int i = 0; i < n; ++i) must_sink[i] = gamma[i] <= 0;

    auto advance = [&]() -> bool {
        for (int j = m - 1; j >= 0; --j) {
            if (digit[j] < g.check_degree(j)) {
                ++digit[j];
                std::fill(digit.begin() + j + 1, digit.end(), 0);
                return true;
            }
        }
        return false;
    };

    do {
        // A variable with gamma <= 0 needs strictly negative flow, so some
        // active check must sink into it; cheap filter before the LP.
        std::vector<bool> sunk(n, false);
        std::vector<int> active;
        for (int j = 0; j < m; ++j)
            if (digit[j] > 0) {
                active.push_back(j);
                sunk[g.check_neighbors(j)[digit[j] - 1]] = true;
            }
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (must_sink[i] && !sunk[i]) ok = false;
        if (!ok) continue;

        if (require_acyclic) {
            std::vector<std::vector<int>> out(n + m);
            std::vector<int> indeg(n + m, 0);
            for (int j : active) {
                int sink = g.check_neighbors(j)[digit[j] - 1];
                for (int i : g.check_neighbors(j)) {
                    int from = i == sink ? n + j : i;
                    int to = i == sink ? i : n + j;
                    out[from].push_back(to);
                    ++indeg[to];
                }
            }
            std::vector<int> stack;
            for (int u = 0; u < n + m; ++u)
                if (indeg[u] == 0) stack.push_back(u);
            int seen = 0;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                ++seen;
                for (int v : out[u])
                    if (--indeg[v] == 0) stack.push_back(v);
            }
            if (seen != n + m) continue;
        }

        // LP in P_j >= 0 for active checks plus the slack variable.
        const int na = static_cast<int>(active.size());
        LpProblem lp;
        lp.nvars = na + 1;
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> row(lp.nvars, Rat(0));
            for (int t = 0; t < na; ++t) {
                int j = active[t];
                if (!g.has_edge(i, j)) continue;
                row[t] = g.check_neighbors(j)[digit[j] - 1] == i ? Rat(-1) : Rat(1);
            }
            row[na] = 1;
            lp.a.push_back(std::move(row));
            lp.b.push_back(gamma[i] + s_shift);
        }
        for (int t = 0; t < na; ++t) {
            std::vector<Rat> row(lp.nvars, Rat(0));
            row[t] = 1;
            lp.a.push_back(std::move(row));
            lp.b.push_back(box);
        }
        lp.c.assign(lp.nvars, Rat(0));
        lp.c[na] = -1;
        auto sol = simplex_solve(lp);
        if (sol.status != LpStatus::Optimal || !(sol.x[na] > s_shift)) continue;

        HyperflowSearch res;
        res.found = true;
        res.assignment.sink.assign(m, -1);
        res.assignment.p.assign(m, Rat(0));
        res.w = zero_weighting(g);
        for (int t = 0; t < na; ++t) {
            int j = active[t];
            if (sol.x[t] == 0) continue;  // the LP left this check inert
            int sink = g.check_neighbors(j)[digit[j] - 1];
            res.assignment.sink[j] = sink;
            res.assignment.p[j] = sol.x[t];
            for (int i : g.check_neighbors(j))
                res.w.set(i, j, i == sink ? -sol.x[t] : sol.x[t]);
        }
        return res;
    } while (advance());

    return {};
}

EdgeWeighting superpose(const EdgeWeighting& w1, const EdgeWeighting& w2) {
    if (w1.n != w2.n || w1.m != w2.m)
        throw structural_error("cannot superpose weightings of different shapes");
    EdgeWeighting out = w1;
    for (const auto& [e, v] : w2.w) out.set(e.first, e.second, out.get(e.first, e.second) + v);
    return out;
}

EdgeWeighting scale_weighting(const EdgeWeighting& w, const Rat& c) {
    EdgeWeighting out;
    out.n = w.n;
    out.m = w.m;
    for (const auto& [e, v] : w.w) out.set(e.first, e.second, v * c);
    return out;
}

LlrVector asymmetric_llr(const BitVector& y, const Rat& beta) {
    if (beta <= 0) throw structural_error("asymmetric llr needs beta > 0");
    LlrVector g;
    for (int i = 0; i < static_cast<int>(y.size()); ++i) g.push_back(y.get(i) ? Rat(-1) : beta);
    return g;
}

LlrVector shifted_llr(const BitVector& y, const Rat& shift) {
    LlrVector g;
    for (int i = 0; i < static_cast<int>(y.size()); ++i) g.push_back((y.get(i) ? Rat(-1) : Rat(1)) + shift);
    return g;
}

std::vector<int> variable_neighborhood(const TannerGraph& g, const std::vector<int>& u, int t) {
    std::vector<bool> in(g.num_vars(), false);
    for (int i : u) {
        if (i < 0 || i >= g.num_vars()) throw structural_error("variable index out of range");
        in[i] = true;
    }
    for (int step = 0; step < t; ++step) {
        std::vector<bool> next = in;
        for (int i = 0; i < g.num_vars(); ++i) {
            if (!in[i]) continue;
            for (int j : g.var_neighbors(i))
                for (int i2 : g.check_neighbors(j)) next[i2] = true;
        }
        in = std::move(next);
    }
    std::vector<int> out;
    for (int i = 0; i < g.num_vars(); ++i)
        if (in[i]) out.push_back(i);
    return out;
}

CascadeResult cascade_superpose(const TannerGraph& g, const std::vector<int>& u, int b) {
    if (b < 1) throw structural_error("cascade depth must be at least 1");
    CascadeResult res;
    res.w = zero_weighting(g);
    for (int t = 0; t < b; ++t) {
        auto layer = variable_neighborhood(g, u, t);
        BitVector y = BitVector::from_support(g.num_vars(), layer);
        auto ws = find_narrow_dual_witness(g, y);
        if (!ws.found) return res;
        res.layers.push_back(std::move(layer));
        res.w = superpose(res.w, ws.w);
    }
    res.found = true;

    // Cascade flow display: F < -(B - 2s) on the s-th layer shell, 0 outside
    // the B-step neighborhood.
    auto outer = variable_neighborhood(g, u, b);
    std::vector<bool> in_outer(g.num_vars(), false);
    for (int i : outer) in_outer[i] = true;
    std::vector<int> shell(g.num_vars(), -1);
    for (int s = b - 1; s >= 0; --s)
        for (int i : res.layers[s]) shell[i] = s;
    for (int i = 0; i < g.num_vars(); ++i) {
        Rat f = flow(g, res.w, i);
        if (shell[i] >= 0) {
            if (!(f < Rat(-(b - 2 * shell[i]))))
                throw std::logic_error("cascade flow bound violated at a layered variable");
        } else if (!in_outer[i] && f != 0) {
            throw std::logic_error("cascade flow leaked outside the layer neighborhood");
        }
    }
    return res;
}

bool verify_weak_dual_witness(const TannerGraph& g, const BitVector& y, const EdgeWeighting& w,
                              int b) {
    if (static_cast<int>(y.size()) != g.num_vars())
        throw structural_error("received word length does not match the graph");
    check_shape(g, w);
    int lapses = 0;
    for (int i = 0; i < g.num_vars(); ++i) {
        Rat f = flow(g, w, i);
        if (!(f < 1)) return false;
        if (y.get(i) && !(f < -1)) ++lapses;
    }
    return lapses <= b;
}

}  // namespace lplab
