#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lplab/bitvec.hpp"
#include "lplab/polytope.hpp"
#include "lplab/rational.hpp"
#include "lplab/tanner.hpp"

namespace lplab {

/// i.i.d. Bernoulli(epsilon) error vector; a pure function of the seed.
BitVector bsc_sample(int n, double epsilon, uint64_t seed);

struct TrialReport {
    std::string graph_id;
    double epsilon = 0;
    long long trials = 0;
    long long failures = 0;
    double wer = 0;
    double ci_lo = 0;
    double ci_hi = 0;
    uint64_t seed = 0;  // per-trial seeds are split_seed(seed, trial)
};

/// Word error rate of the LP decoder under the all-zeros convention:
/// failure when lp_decode(G, (-1)^y) fails for a sampled error vector y.
/// jobs > 1 splits the trial range across threads; per-trial seeds make the
/// result independent of the split.
TrialReport wer_estimate(const TannerGraph& g, double epsilon, long long trials, uint64_t seed,
                         const std::string& graph_id = "", int jobs = 1);

struct ThresholdEstimate {
    std::string variant;
    std::vector<double> grid;
    std::vector<double> wer;
    std::vector<long long> failures;
    // Linear interpolation where the curve crosses the target, never
    // extrapolated beyond the grid.
    std::optional<double> crossing_half;
    std::optional<double> crossing_tenth;
};

struct ScanResult {
    std::vector<ThresholdEstimate> per_variant;
    long long trials_per_point = 0;
    // Count of paired trials where a variant succeeded but a later (tighter)
    // variant failed; polytope nesting says this must stay 0.
    long long dominance_violations = 0;
};

/// Paired scan over graph variants ordered loosest to tightest (G, augmented,
/// all-redundant): every grid point reuses the same error vectors across
/// variants and success is checked to be monotone along the variant order.
ScanResult threshold_scan(const std::vector<std::pair<std::string, TannerGraph>>& variants,
                          const std::vector<double>& grid, long long trials, uint64_t seed);

/// Smallest-weight flip pattern z (weight then lexicographic order) such that
/// lp_decode succeeds on (-1)^(y xor z); at most b flips, search capped at
/// 10^6 patterns.
std::optional<BitVector> decode_with_help(const TannerGraph& g, const BitVector& y, int b);

struct ExcessReport {
    double epsilon = 0;
    double epsilon_prime = 0;  // epsilon + (1-epsilon) delta
    long long trials = 0;
    long long witness_hits = 0;   // witness exists for (-1)^x - delta/2 at epsilon
    long long prime_failures = 0;  // plain LP failures at epsilon_prime
    double witness_freq = 0;
    double q_prime = 0;
};

/// Empirical check of the excess trade: freq(witness for the -delta/2 shift
/// at epsilon) should be >= 1 - 2 q_{epsilon'} / delta.
ExcessReport excess_experiment(const TannerGraph& g, double epsilon, const Rat& delta,
                               long long trials, uint64_t seed);

struct DeficiencyReport {
    double epsilon = 0;
    double epsilon_prime = 0;
    long long trials = 0;
    long long plain_failures = 0;   // LP failures at epsilon
    long long deficient_misses = 0;  // no witness for the +delta/2 shift at epsilon'
    double fail_rate = 0;
    double q_prime_delta = 0;
};

/// Empirical check of the deficiency trade: fail(epsilon) should be
/// <= 2 q_{epsilon',delta} / delta.
DeficiencyReport deficiency_experiment(const TannerGraph& g, double epsilon, const Rat& delta,
                                       long long trials, uint64_t seed);

}  // namespace lplab
