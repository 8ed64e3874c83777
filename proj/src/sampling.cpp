#include "lplab/sampling.hpp"

#include <numeric>
#include <set>
#include <vector>

#include "lplab/errors.hpp"
#include "lplab/prng.hpp"

namespace lplab {

TannerGraph sample_check_regular(int n, int m, int d, uint64_t seed) {
    if (d < 1 || d > n) throw structural_error("sample_check_regular: require 1 <= d <= n");
    std::vector<BitVector> rows;
    rows.reserve(m);
    std::vector<int> idx(n);
    for (int r = 0; r < m; ++r) {
        SplitMix64 rng(split_seed(seed, static_cast<uint64_t>(r)));
        std::iota(idx.begin(), idx.end(), 0);
        BitVector row(n);
        // Partial Fisher-Yates: the first d slots are a uniform d-subset.
        for (int i = 0; i < d; ++i) {
            int j = i + static_cast<int>(rng.next_below(static_cast<uint64_t>(n - i)));
            std::swap(idx[i], idx[j]);
            row.set(idx[i], true);
        }
        rows.push_back(std::move(row));
    }
    return TannerGraph::from_rows(n, std::move(rows));
}

TannerGraph sample_variable_regular(int n, int m, int d_v, uint64_t seed) {
    if (d_v < 1) throw structural_error("sample_variable_regular: d_v must be >= 1");
    long long edges = static_cast<long long>(n) * d_v;
    if (m < 1 || edges % m != 0)
        throw structural_error("sample_variable_regular: n*d_v must be divisible by m");
    long long d_c = edges / m;
    if (d_c > n)
        throw structural_error("sample_variable_regular: infeasible degree sequence (d_c > n)");
    std::vector<int> var_stubs;
    var_stubs.reserve(edges);
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < d_v; ++t) var_stubs.push_back(i);
    const int max_attempts = 10000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        SplitMix64 rng(split_seed(seed, static_cast<uint64_t>(attempt)));
        std::vector<int> perm = var_stubs;
        for (std::size_t i = perm.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(rng.next_below(i));
            std::swap(perm[i - 1], perm[j]);
        }
        // Check stubs in blocks of d_c; reject the matching on any parallel edge.
        std::vector<BitVector> rows;
        rows.reserve(m);
        bool ok = true;
        std::size_t pos = 0;
        for (int j = 0; j < m && ok; ++j) {
            BitVector row(n);
            for (long long t = 0; t < d_c; ++t, ++pos) {
                int i = perm[pos];
                if (row.get(i)) {
                    ok = false;
                    break;
                }
                row.set(i, true);
            }
            if (ok) rows.push_back(std::move(row));
        }
        if (ok) return TannerGraph::from_rows(n, std::move(rows));
    }
    throw structural_error(
        "sample_variable_regular: could not draw a simple matching (degree sequence too tight)");
}

}  // namespace lplab
