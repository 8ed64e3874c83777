#include "lplab/simulator.hpp"

#include <map>
#include <thread>

#include "lplab/errors.hpp"
#include "lplab/prng.hpp"
#include "lplab/stats.hpp"
#include "lplab/witness.hpp"

namespace lplab {

BitVector bsc_sample(int n, double epsilon, uint64_t seed) {
    if (!(epsilon >= 0 && epsilon < 0.5))
        throw structural_error("crossover probability must lie in [0, 1/2)");
    SplitMix64 rng(seed);
    BitVector y(n);
    for (int i = 0; i < n; ++i)
        if (rng.next_unit() < epsilon) y.set(i, true);
    return y;
}

namespace {

LlrVector channel_llr(const BitVector& y) {
    LlrVector g;
    for (int i = 0; i < static_cast<int>(y.size()); ++i) g.push_back(y.get(i) ? Rat(-1) : Rat(1));
    return g;
}

// Decode verdicts keyed by error pattern; small n makes the pattern space
// tiny compared to the trial count.
struct CachedDecoder {
    Polytope p;
    std::map<BitVector, bool> verdict;

    explicit CachedDecoder(const TannerGraph& g) : p(build_fundamental_polytope(g)) {}

    bool success(const BitVector& y) {
        auto it = verdict.find(y);
        if (it != verdict.end()) return it->second;
        bool ok = lp_decode_polytope(p, channel_llr(y)).success;
        verdict.emplace(y, ok);
        return ok;
    }
};

}  // namespace

TrialReport wer_estimate(const TannerGraph& g, double epsilon, long long trials, uint64_t seed,
                         const std::string& graph_id, int jobs) {
    if (trials < 1) throw structural_error("wer_estimate needs trials >= 1");
    if (jobs < 1) throw structural_error("wer_estimate needs jobs >= 1");
    TrialReport rep;
    rep.graph_id = graph_id;
    rep.epsilon = epsilon;
    rep.trials = trials;
    rep.seed = seed;
    if (jobs > trials) jobs = static_cast<int>(trials);
    std::vector<long long> fails(jobs, 0);
    auto run = [&](int worker) {
        CachedDecoder dec(g);
        for (long long t = worker; t < trials; t += jobs) {
            BitVector y = bsc_sample(g.num_vars(), epsilon, split_seed(seed, uint64_t(t)));
            if (!dec.success(y)) ++fails[worker];
        }
    };
    if (jobs == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }
    for (long long f : fails) rep.failures += f;
    rep.wer = double(rep.failures) / double(trials);
    auto [lo, hi] = wilson_interval(rep.failures, trials);
    rep.ci_lo = lo;
    rep.ci_hi = hi;
    return rep;
}

namespace {

std::optional<double> interpolate_crossing(const std::vector<double>& grid,
                                           const std::vector<double>& wer, double target) {
    for (size_t t = 1; t < grid.size(); ++t) {
        double a = wer[t - 1], b = wer[t];
        if ((a - target) * (b - target) > 0) continue;
        if (a == b) return grid[t - 1];
        return grid[t - 1] + (target - a) / (b - a) * (grid[t] - grid[t - 1]);
    }
    return std::nullopt;
}

}  // namespace

ScanResult threshold_scan(const std::vector<std::pair<std::string, TannerGraph>>& variants,
                          const std::vector<double>& grid, long long trials, uint64_t seed) {
    if (variants.empty()) throw structural_error("threshold_scan needs at least one variant");
    if (trials < 1) throw structural_error("threshold_scan needs trials >= 1");
    const int n = variants.front().second.num_vars();
    for (const auto& [name, g] : variants)
        if (g.num_vars() != n)
            throw structural_error("threshold_scan variants must share the variable set");
    for (size_t t = 1; t < grid.size(); ++t)
        if (!(grid[t] > grid[t - 1]))
            throw structural_error("threshold_scan grid must be strictly increasing");

    ScanResult res;
    res.trials_per_point = trials;
    std::vector<CachedDecoder> dec;
    dec.reserve(variants.size());
    for (const auto& [name, g] : variants) dec.emplace_back(g);
    for (const auto& [name, g] : variants) {
        ThresholdEstimate est;
        est.variant = name;
        est.grid = grid;
        res.per_variant.push_back(std::move(est));
    }

    for (size_t e = 0; e < grid.size(); ++e) {
        std::vector<long long> failures(variants.size(), 0);
        for (long long t = 0; t < trials; ++t) {
            BitVector y =
                bsc_sample(n, grid[e], split_seed(seed, uint64_t(e) * uint64_t(trials) + t));
            bool prev_success = false;
            for (size_t v = 0; v < variants.size(); ++v) {
                bool ok = dec[v].success(y);
                if (!ok) ++failures[v];
                if (prev_success && !ok) ++res.dominance_violations;
                prev_success = ok;
            }
        }
        for (size_t v = 0; v < variants.size(); ++v) {
            res.per_variant[v].failures.push_back(failures[v]);
            res.per_variant[v].wer.push_back(double(failures[v]) / double(trials));
        }
    }
    for (auto& est : res.per_variant) {
        est.crossing_half = interpolate_crossing(grid, est.wer, 0.5);
        est.crossing_tenth = interpolate_crossing(grid, est.wer, 0.1);
    }
    return res;
}

std::optional<BitVector> decode_with_help(const TannerGraph& g, const BitVector& y, int b) {
    const int n = g.num_vars();
    if (static_cast<int>(y.size()) != n) throw structural_error("received word length does not match the graph");
    if (b < 0) throw structural_error("help budget must be nonnegative");
    long long patterns = 0, layer = 1;
    for (int w = 0; w <= b && w <= n; ++w) {
        patterns += layer;
        require_cap(patterns, 1000000, "help-bit search pattern count");
        layer = layer * (n - w) / (w + 1);
    }
    CachedDecoder dec(g);
    // Weight 0 first, then combinations in lexicographic position order.
    if (dec.success(y)) return BitVector(n);
    for (int w = 1; w <= b && w <= n; ++w) {
        std::vector<int> comb(w);
        for (int t = 0; t < w; ++t) comb[t] = t;
        for (;;) {
            BitVector z = BitVector::from_support(n, comb);
            if (dec.success(y ^ z)) return z;
            int t = w - 1;
            while (t >= 0 && comb[t] == n - w + t) --t;
            if (t < 0) break;
            ++comb[t];
            for (int u = t + 1; u < w; ++u) comb[u] = comb[u - 1] + 1;
        }
    }
    return std::nullopt;
}

ExcessReport excess_experiment(const TannerGraph& g, double epsilon, const Rat& delta,
                               long long trials, uint64_t seed) {
    if (!(delta > 0 && delta < 1)) throw structural_error("excess delta must lie in (0,1)");
    if (trials < 1) throw structural_error("excess_experiment needs trials >= 1");
    double ddelta = static_cast<double>(delta);
    ExcessReport rep;
    rep.epsilon = epsilon;
    rep.epsilon_prime = epsilon + (1 - epsilon) * ddelta;
    rep.trials = trials;

    std::map<BitVector, bool> witness_cache;
    CachedDecoder dec(g);
    Rat shift = -delta / 2;
    for (long long t = 0; t < trials; ++t) {
        BitVector x = bsc_sample(g.num_vars(), epsilon, split_seed(seed, uint64_t(t)));
        auto it = witness_cache.find(x);
        bool hit;
        if (it != witness_cache.end()) {
            hit = it->second;
        } else {
            hit = find_dual_witness(g, shifted_llr(x, shift)).found;
            witness_cache.emplace(x, hit);
        }
        if (hit) ++rep.witness_hits;

        BitVector y = bsc_sample(g.num_vars(), rep.epsilon_prime,
                                 split_seed(seed, uint64_t(trials + t)));
        if (!dec.success(y)) ++rep.prime_failures;
    }
    rep.witness_freq = double(rep.witness_hits) / double(trials);
    rep.q_prime = double(rep.prime_failures) / double(trials);
    return rep;
}

DeficiencyReport deficiency_experiment(const TannerGraph& g, double epsilon, const Rat& delta,
                                       long long trials, uint64_t seed) {
    if (!(delta > 0 && delta < 1)) throw structural_error("deficiency delta must lie in (0,1)");
    if (trials < 1) throw structural_error("deficiency_experiment needs trials >= 1");
    double ddelta = static_cast<double>(delta);
    DeficiencyReport rep;
    rep.epsilon = epsilon;
    rep.epsilon_prime = epsilon + (1 - epsilon) * ddelta;
    rep.trials = trials;

    CachedDecoder dec(g);
    std::map<BitVector, bool> witness_cache;
    Rat shift = delta / 2;
    for (long long t = 0; t < trials; ++t) {
        BitVector x = bsc_sample(g.num_vars(), epsilon, split_seed(seed, uint64_t(t)));
        if (!dec.success(x)) ++rep.plain_failures;

        BitVector y = bsc_sample(g.num_vars(), rep.epsilon_prime,
                                 split_seed(seed, uint64_t(trials + t)));
        auto it = witness_cache.find(y);
        bool hit;
        if (it != witness_cache.end()) {
            hit = it->second;
        } else {
            hit = find_dual_witness(g, shifted_llr(y, shift)).found;
            witness_cache.emplace(y, hit);
        }
        if (!hit) ++rep.deficient_misses;
    }
    rep.fail_rate = double(rep.plain_failures) / double(trials);
    rep.q_prime_delta = double(rep.deficient_misses) / double(trials);
    return rep;
}

}  // namespace lplab
