#include "lplab/diagnostics.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

#include "lplab/errors.hpp"
#include "lplab/prng.hpp"

namespace lplab {

namespace {

// Visit all size-t subsets of {0..m-1}; returns false if visitor aborts.
template <typename F>
bool for_each_combination(int m, int t, F&& visit) {
    std::vector<int> idx(t);
    std::iota(idx.begin(), idx.end(), 0);
    if (t == 0) return true;
    if (t > m) return true;
    for (;;) {
        if (!visit(idx)) return false;
        int i = t - 1;
        while (i >= 0 && idx[i] == m - t + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

double choose_approx(int n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= double(n - i) / double(i + 1);
    return r;
}

}  // namespace

std::optional<int> girth(const TannerGraph& g) {
    int n = g.num_vars(), m = g.num_checks();
    int total = n + m;
    auto neighbors = [&](int v) -> const std::vector<int>& {
        return v < n ? g.var_neighbors(v) : g.check_neighbors(v - n);
    };
    auto node_id = [&](int v, bool from_var) { return from_var ? v + n : v; };
    int best = -1;
    std::vector<int> dist(total), parent(total);
    for (int root = 0; root < total; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> q{root};
        dist[root] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            bool u_is_var = u < n;
            for (int w : neighbors(u)) {
                int v = node_id(w, u_is_var);
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                } else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

bool is_cyclic_subset(const TannerGraph& g, const std::vector<int>& subset) {
    if (subset.size() < 2) return false;
    // Degrees within the induced bipartite subgraph.
    std::vector<int> var_deg(g.num_vars(), 0);
    for (int j : subset)
        for (int i : g.check_neighbors(j)) ++var_deg[i];
    std::vector<int> check_deg(subset.size());
    std::vector<int> check_pos(g.num_checks(), -1);
    for (std::size_t s = 0; s < subset.size(); ++s) {
        check_deg[s] = g.check_degree(subset[s]);
        check_pos[subset[s]] = static_cast<int>(s);
    }
    // Leaf stripping: peel degree-<=1 nodes; a nonempty 2-core means a cycle.
    std::deque<int> q;  // var i encoded as i, check slot s encoded as n + s
    int n = g.num_vars();
    std::vector<bool> removed_var(n, false), removed_check(subset.size(), false);
    for (int i = 0; i < n; ++i)
        if (var_deg[i] == 1) q.push_back(i);
    for (std::size_t s = 0; s < subset.size(); ++s)
        if (check_deg[s] <= 1) q.push_back(n + static_cast<int>(s));
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (u < n) {
            if (removed_var[u] || var_deg[u] == 0) continue;
            removed_var[u] = true;
            for (int j : g.var_neighbors(u)) {
                int s = check_pos[j];
                if (s < 0 || removed_check[s]) continue;
                if (--check_deg[s] == 1) q.push_back(n + s);
            }
            var_deg[u] = 0;
        } else {
            int s = u - n;
            if (removed_check[s]) continue;
            removed_check[s] = true;
            for (int i : g.check_neighbors(subset[s])) {
                if (removed_var[i] || var_deg[i] == 0) continue;
                if (--var_deg[i] == 1) q.push_back(i);
            }
        }
    }
    // Edges not strippable remain in the 2-core.
    for (std::size_t s = 0; s < subset.size(); ++s)
        if (!removed_check[s] && check_deg[s] >= 2) return true;
    return false;
}

DeltaResult delta_min_cyclic_sum(const TannerGraph& g, int subset_cap) {
    int m = g.num_checks();
    DeltaResult res;
    res.infinite = true;
    long long cap = effective_cap(subset_cap);
    auto consider = [&](const std::vector<int>& subset, const BitVector& sum) {
        if (!is_cyclic_subset(g, subset)) return;
        int w = static_cast<int>(sum.weight());
        if (res.infinite || w < res.value) {
            res.infinite = false;
            res.value = w;
        }
    };
    if (m <= cap) {
        // Gray-code walk maintaining the running sum.
        BitVector cur(g.num_vars());
        std::vector<int> subset;
        uint64_t total = uint64_t(1) << m;
        uint64_t prev_gray = 0;
        for (uint64_t k = 1; k < total; ++k) {
            uint64_t gray = k ^ (k >> 1);
            int bit = std::countr_zero(gray ^ prev_gray);
            prev_gray = gray;
            cur ^= g.check(bit);
            subset.clear();
            for (int j = 0; j < m; ++j)
                if ((gray >> j) & 1) subset.push_back(j);
            if (subset.size() >= 2) consider(subset, cur);
            if (!res.infinite && res.value == 0) break;
        }
        res.exact = true;
        return res;
    }
    // Bounded-size scan; the answer is only an upper bound.
    res.exact = false;
    long long budget = 1 << 22;
    for (int t = 2; t <= m; ++t) {
        double count = choose_approx(m, t);
        if (count > static_cast<double>(budget)) break;
        budget -= static_cast<long long>(count);
        for_each_combination(m, t, [&](const std::vector<int>& idx) {
            BitVector sum(g.num_vars());
            for (int j : idx) sum ^= g.check(j);
            consider(idx, sum);
            return true;
        });
    }
    return res;
}

NondegeneracyResult is_nondegenerate(const TannerGraph& g, int s, int k, int subset_cap,
                                     uint64_t seed, int random_trials) {
    int m = g.num_checks();
    if (s < 1 || s > m) throw structural_error("is_nondegenerate: require 1 <= s <= m");
    long long cap = effective_cap(subset_cap);
    if (m <= cap && m <= 62) {
        BitVector cur(g.num_vars());
        uint64_t total = uint64_t(1) << m;
        uint64_t prev_gray = 0;
        for (uint64_t q = 1; q < total; ++q) {
            uint64_t gray = q ^ (q >> 1);
            int bit = std::countr_zero(gray ^ prev_gray);
            prev_gray = gray;
            cur ^= g.check(bit);
            if (std::popcount(gray) >= s && cur.weight() <= static_cast<std::size_t>(k)) {
                NondegeneracyResult r;
                r.status = NondegeneracyResult::Status::False;
                for (int j = 0; j < m; ++j)
                    if ((gray >> j) & 1) r.witness.push_back(j);
                return r;
            }
        }
        return {NondegeneracyResult::Status::True, {}};
    }
    // Randomized violation search.
    SplitMix64 rng(split_seed(seed, 0x6e646567));
    std::vector<int> pool(m);
    std::iota(pool.begin(), pool.end(), 0);
    for (int t = 0; t < random_trials; ++t) {
        int size = s + static_cast<int>(rng.next_below(static_cast<uint64_t>(m - s + 1)));
        for (int i = 0; i < size; ++i) {
            int j = i + static_cast<int>(rng.next_below(static_cast<uint64_t>(m - i)));
            std::swap(pool[i], pool[j]);
        }
        BitVector sum(g.num_vars());
        for (int i = 0; i < size; ++i) sum ^= g.check(pool[i]);
        if (sum.weight() <= static_cast<std::size_t>(k)) {
            NondegeneracyResult r;
            r.status = NondegeneracyResult::Status::False;
            r.witness.assign(pool.begin(), pool.begin() + size);
            std::sort(r.witness.begin(), r.witness.end());
            return r;
        }
    }
    return {NondegeneracyResult::Status::Unknown, {}};
}

ExpansionResult check_expansion(const TannerGraph& g, int max_set, const Rat& kappa,
                                long long work_cap, uint64_t seed, int random_trials) {
    if (kappa <= 0) throw structural_error("check_expansion: kappa must be positive");
    int n = g.num_vars();
    max_set = std::min(max_set, n);
    long long cap = effective_cap(work_cap);
    double work = 0;
    for (int t = 1; t <= max_set; ++t) work += choose_approx(n, t);
    auto neighborhood_size = [&](const std::vector<int>& vars) {
        std::vector<uint64_t> seen((g.num_checks() + 63) / 64, 0);
        int count = 0;
        for (int i : vars)
            for (int j : g.var_neighbors(i)) {
                uint64_t mask = uint64_t(1) << (j & 63);
                if (!(seen[j >> 6] & mask)) {
                    seen[j >> 6] |= mask;
                    ++count;
                }
            }
        return count;
    };
    auto violates = [&](const std::vector<int>& vars) {
        return Rat(neighborhood_size(vars)) < kappa * static_cast<int>(vars.size());
    };
    if (work <= static_cast<double>(cap)) {
        ExpansionResult res{ExpansionResult::Status::Certified, {}};
        for (int t = 1; t <= max_set && res.status == ExpansionResult::Status::Certified; ++t) {
            for_each_combination(n, t, [&](const std::vector<int>& idx) {
                if (violates(idx)) {
                    res.status = ExpansionResult::Status::Violated;
                    res.violating_set = idx;
                    return false;
                }
                return true;
            });
        }
        return res;
    }
    // Randomized search for a violating set; Unknown when none is found.
    SplitMix64 rng(split_seed(seed, 0x65787061));
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int t = 0; t < random_trials; ++t) {
        int size = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(max_set)));
        for (int i = 0; i < size; ++i) {
            int j = i + static_cast<int>(rng.next_below(static_cast<uint64_t>(n - i)));
            std::swap(pool[i], pool[j]);
        }
        std::vector<int> sub(pool.begin(), pool.begin() + size);
        if (violates(sub)) {
            std::sort(sub.begin(), sub.end());
            return {ExpansionResult::Status::Violated, sub};
        }
    }
    return {ExpansionResult::Status::Unknown, {}};
}

}  // namespace lplab
