#pragma once

// Independent re-implementations used as test oracles. Everything here is
// deliberately written differently from the library (dense vectors, plain
// loops, std::mt19937_64) so agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "lplab/bitvec.hpp"
#include "lplab/polytope.hpp"
#include "lplab/tanner.hpp"

namespace oracle {

using lplab::BitVector;
using lplab::Rat;
using lplab::TannerGraph;

// GF(2) rank by dense elimination over vector<char>.
inline int rank_gf2(std::vector<std::vector<char>> rows) {
    int rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols; ++c) {
        int pivot = -1;
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][c]) {
                pivot = static_cast<int>(r);
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (static_cast<int>(r) != rank && rows[r][c])
                for (std::size_t cc = 0; cc < cols; ++cc) rows[r][cc] ^= rows[rank][cc];
        ++rank;
    }
    return rank;
}

inline std::vector<char> to_dense(const BitVector& v) {
    std::vector<char> out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v.get(i);
    return out;
}

// Shortest cycle in the bipartite graph: for every edge (i, j), remove it and
// BFS from i to j; cycle length = dist + 1. Nodes 0..n-1 are variables,
// n..n+m-1 are checks.
inline std::optional<int> girth(const TannerGraph& g) {
    int n = g.num_vars(), m = g.num_checks();
    std::vector<std::vector<int>> adj(n + m);
    for (int j = 0; j < m; ++j)
        for (int i : g.check_neighbors(j)) {
            adj[i].push_back(n + j);
            adj[n + j].push_back(i);
        }
    int best = -1;
    for (int j = 0; j < m; ++j)
        for (int i : g.check_neighbors(j)) {
            std::vector<int> dist(n + m, -1);
            std::deque<int> q{i};
            dist[i] = 0;
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                for (int v : adj[u]) {
                    if ((u == i && v == n + j) || (u == n + j && v == i)) continue;
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        q.push_back(v);
                    }
                }
            }
            if (dist[n + j] >= 0) {
                int cyc = dist[n + j] + 1;
                if (best < 0 || cyc < best) best = cyc;
            }
        }
    if (best < 0) return std::nullopt;
    return best;
}

// Cycle test on the subgraph induced by a check subset: per connected
// component, edges >= vertices means a cycle (the graph is simple bipartite).
inline bool cyclic_subset(const TannerGraph& g, const std::vector<int>& subset) {
    int n = g.num_vars();
    std::vector<int> parent(n + g.num_checks());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int j : subset)
        for (int i : g.check_neighbors(j)) {
            int a = find(i), b = find(n + j);
            if (a == b) return true;  // edge closes a cycle
            parent[a] = b;
        }
    return false;
}

// All codewords by brute force over 2^n.
inline std::vector<BitVector> codewords(const TannerGraph& g) {
    int n = g.num_vars();
    std::vector<BitVector> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        BitVector x(n);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) x.set(i, true);
        bool ok = true;
        for (int j = 0; j < g.num_checks() && ok; ++j) {
            int parity = 0;
            for (int i : g.check_neighbors(j)) parity ^= x.get(i);
            ok = parity == 0;
        }
        if (ok) out.push_back(x);
    }
    return out;
}

inline Rat cost(const std::vector<Rat>& x, const std::vector<Rat>& c) {
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * c[i];
    return s;
}

inline std::vector<Rat> to_point(const BitVector& x) {
    std::vector<Rat> p(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) p[i] = x.get(i) ? 1 : 0;
    return p;
}

// Random connected-ish test graphs; every check nonempty, every variable
// covered when cover_all is set.
inline TannerGraph random_graph(std::mt19937_64& rng, int n, int m, int max_deg,
                                bool cover_all = false) {
    for (;;) {
        std::vector<std::vector<int>> supports(m);
        std::vector<char> used(n, 0);
        for (int j = 0; j < m; ++j) {
            int deg = 1 + static_cast<int>(rng() % max_deg);
            std::set<int> s;
            while (static_cast<int>(s.size()) < deg) s.insert(static_cast<int>(rng() % n));
            supports[j].assign(s.begin(), s.end());
            for (int i : supports[j]) used[i] = 1;
        }
        if (cover_all && std::count(used.begin(), used.end(), 1) != n) continue;
        return TannerGraph::from_supports(n, supports);
    }
}

// Random acyclic (forest) Tanner graph: grow checks that touch at most one
// already-connected variable.
inline TannerGraph random_forest(std::mt19937_64& rng, int n, int m, int max_deg) {
    std::vector<std::vector<int>> supports;
    std::vector<char> touched(n, 0);
    std::vector<int> fresh(n);
    std::iota(fresh.begin(), fresh.end(), 0);
    std::shuffle(fresh.begin(), fresh.end(), rng);
    std::size_t next = 0;
    for (int j = 0; j < m; ++j) {
        int deg = 2 + static_cast<int>(rng() % (max_deg - 1));
        std::vector<int> s;
        // At most one previously-touched variable keeps the bipartite graph
        // a forest.
        std::vector<int> seen;
        for (int i = 0; i < n; ++i)
            if (touched[i]) seen.push_back(i);
        if (!seen.empty() && rng() % 2) s.push_back(seen[rng() % seen.size()]);
        while (static_cast<int>(s.size()) < deg && next < fresh.size()) s.push_back(fresh[next++]);
        if (static_cast<int>(s.size()) < 2) break;
        for (int i : s) touched[i] = 1;
        supports.push_back(s);
    }
    if (supports.empty()) supports.push_back({0, 1});
    return TannerGraph::from_supports(n, supports);
}

}  // namespace oracle
