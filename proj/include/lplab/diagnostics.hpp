#pragma once

#include <optional>
#include <vector>

#include "lplab/rational.hpp"
#include "lplab/tanner.hpp"

namespace lplab {

/// Shortest cycle length in the bipartite graph (even, >= 4); nullopt = forest.
std::optional<int> girth(const TannerGraph& g);

/// Whether the subgraph induced by G on the check subset S contains a cycle,
/// decided by leaf-stripping (nonempty 2-core).
bool is_cyclic_subset(const TannerGraph& g, const std::vector<int>& subset);

struct DeltaResult {
    bool infinite = false;  // no cyclic subset exists
    bool exact = true;      // false: value is only an upper bound (Unknown)
    int value = 0;
};

/// Minimum weight of the sum over a cyclic check subset (Delta(G)).
/// Exhaustive for m <= subset_cap, otherwise bounded-size search tagged inexact.
DeltaResult delta_min_cyclic_sum(const TannerGraph& g, int subset_cap = 20);

struct NondegeneracyResult {
    enum class Status { True, False, Unknown } status;
    std::vector<int> witness;  // violating check subset when status == False
};

/// (s,k)-nondegeneracy: every subset of >= s rows sums to weight > k.
/// Exhaustive for m <= subset_cap, else seeded randomized search.
NondegeneracyResult is_nondegenerate(const TannerGraph& g, int s, int k, int subset_cap = 24,
                                     uint64_t seed = 0, int random_trials = 200000);

struct ExpansionResult {
    enum class Status { Certified, Violated, Unknown } status;
    std::vector<int> violating_set;
};

/// Checks |N(S)| >= kappa * |S| for all variable subsets of size <= max_set.
/// Exhaustive while the subset count stays below work_cap, else randomized.
ExpansionResult check_expansion(const TannerGraph& g, int max_set, const Rat& kappa,
                                long long work_cap = 10000000, uint64_t seed = 0,
                                int random_trials = 200000);

}  // namespace lplab
