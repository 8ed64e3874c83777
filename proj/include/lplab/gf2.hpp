#pragma once

#include <vector>

#include "lplab/bitvec.hpp"
#include "lplab/tanner.hpp"

namespace lplab {

/// GF(2) row rank via elimination. Throws structural_error on length mismatch.
int rank_gf2(const std::vector<BitVector>& rows);

/// A maximal linearly independent subset of the rows, in elimination order.
std::vector<BitVector> row_basis_gf2(const std::vector<BitVector>& rows);

/// Basis of { x : rows * x = 0 } over GF(2), vectors of length n.
std::vector<BitVector> nullspace_basis_gf2(const std::vector<BitVector>& rows, int n);

/// All nonzero dual words of weight <= k, obtained by exhaustive span
/// enumeration over a row basis of the base checks.
struct RedundantCheckSet {
    int n = 0;
    int k = 0;
    std::vector<BitVector> dual_words;  // sorted lexicographically
};

/// Exhaustive enumeration of the 2^rank - 1 nonzero combinations.
/// span_cap: maximum allowed rank (default 22; LP_LAB_WORK_CAP overrides).
RedundantCheckSet enumerate_dual_low_weight(const TannerGraph& g, int k, int span_cap = 22);

/// The redundant-check graph: all nonzero dual words of weight <= k as checks.
TannerGraph augmented_graph(const TannerGraph& g, int k, int span_cap = 22);

}  // namespace lplab
