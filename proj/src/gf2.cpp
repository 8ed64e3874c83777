#include "lplab/gf2.hpp"

#include <algorithm>

#include "lplab/errors.hpp"

namespace lplab {

namespace {

// Eliminate in place; returns pivot column of each retained row.
int eliminate(std::vector<BitVector>& rows) {
    if (rows.empty()) return 0;
    std::size_t n = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) throw structural_error("rank_gf2: row length mismatch");
    int rank = 0;
    for (std::size_t col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r].get(col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

}  // namespace

int rank_gf2(const std::vector<BitVector>& rows) {
    auto copy = rows;
    return eliminate(copy);
}

std::vector<BitVector> row_basis_gf2(const std::vector<BitVector>& rows) {
    // Incremental insertion keeps original row content (not reduced echelon).
    std::vector<BitVector> basis;
    std::vector<BitVector> reduced;
    for (const auto& row : rows) {
        BitVector cur = row;
        for (const auto& b : reduced) {
            int p = b.lowest_set();
            if (p >= 0 && cur.get(p)) cur ^= b;
        }
        if (cur.any()) {
            basis.push_back(row);
            reduced.push_back(cur);
        }
    }
    return basis;
}

std::vector<BitVector> nullspace_basis_gf2(const std::vector<BitVector>& rows, int n) {
    auto m = rows;
    int rank = eliminate(m);
    m.resize(rank);
    std::vector<int> pivot_col(rank, -1);
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) {
        pivot_col[r] = m[r].lowest_set();
        is_pivot[pivot_col[r]] = true;
    }
    std::vector<BitVector> basis;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        BitVector v(n);
        v.set(col, true);
        for (int r = 0; r < rank; ++r)
            if (m[r].get(col)) v.set(pivot_col[r], true);
        basis.push_back(v);
    }
    return basis;
}

RedundantCheckSet enumerate_dual_low_weight(const TannerGraph& g, int k, int span_cap) {
    if (k < 1) throw structural_error("enumerate_dual_low_weight: k must be >= 1");
    auto basis = row_basis_gf2(g.checks());
    require_cap(static_cast<long long>(basis.size()), span_cap,
                "dual-word span enumeration rank");
    int r = static_cast<int>(basis.size());
    RedundantCheckSet out;
    out.n = g.num_vars();
    out.k = k;
    // Gray-code walk over all 2^r - 1 nonzero combinations.
    BitVector cur(g.num_vars());
    uint64_t total = uint64_t(1) << r;
    uint64_t prev_gray = 0;
    for (uint64_t m = 1; m < total; ++m) {
        uint64_t gray = m ^ (m >> 1);
        uint64_t changed = gray ^ prev_gray;
        prev_gray = gray;
        int bit = std::countr_zero(changed);
        cur ^= basis[bit];
        if (cur.weight() <= static_cast<std::size_t>(k)) out.dual_words.push_back(cur);
    }
    std::sort(out.dual_words.begin(), out.dual_words.end());
    return out;
}

TannerGraph augmented_graph(const TannerGraph& g, int k, int span_cap) {
    auto set = enumerate_dual_low_weight(g, k, span_cap);
    return TannerGraph::from_rows(g.num_vars(), std::move(set.dual_words));
}

}  // namespace lplab
