#include "lplab/calkin.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "lplab/diagnostics.hpp"
#include "lplab/errors.hpp"
#include "lplab/prng.hpp"
#include "lplab/sampling.hpp"
#include "lplab/stats.hpp"

namespace lplab {

namespace {

BigInt binom(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long t = 0; t < k; ++t) {
        r *= n - t;
        r /= t + 1;
    }
    return r;
}

double entropy2(double a) { return -a * std::log2(a) - (1 - a) * std::log2(1 - a); }

// log2 C(n,k) via lgamma
double log2_binom(long long n, long long k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return (std::lgamma(double(n + 1)) - std::lgamma(double(k + 1)) -
            std::lgamma(double(n - k + 1))) /
           std::log(2.0);
}

double log2_sum(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    double hi = a > b ? a : b, lo = a > b ? b : a;
    return hi + std::log2(1 + std::exp2(lo - hi));
}

}  // namespace

double f_d(double alpha, double beta, int d) {
    if (!(alpha > 0 && alpha < 1)) throw numeric_error("f_d: alpha must lie in (0,1)");
    if (d < 1) throw numeric_error("f_d: d must be positive");
    double v = std::pow(1 - 2 * alpha, d);
    return -1 + entropy2(alpha) + beta * std::log2(1 + v);
}

CalkinThreshold beta_d(int d, double tol) {
    if (d < 3) throw numeric_error("beta_d is defined for d >= 3");
    // beta(a) = N/D with N = 1 - H(a), D = log2(1 + (1-2a)^d); the sign of
    // beta' is the sign of N'D - ND'.
    auto dsign = [&](double a) {
        double v = std::pow(1 - 2 * a, d);
        double nn = 1 - entropy2(a);
        double np = -std::log2((1 - a) / a);
        double dd = std::log2(1 + v);
        double dp = -2 * d * std::pow(1 - 2 * a, d - 1) / ((1 + v) * std::log(2.0));
        return np * dd - nn * dp;
    };
    double lo = 1e-9, hi = 0.5 - 1e-9;
    if (!(dsign(lo) < 0 && dsign(hi) > 0))
        throw numeric_error("beta_d: derivative does not bracket a minimum");
    while (hi - lo > tol) {
        double mid = (lo + hi) / 2;
        (dsign(mid) < 0 ? lo : hi) = mid;
    }
    double a = (lo + hi) / 2;
    double v = std::pow(1 - 2 * a, d);
    return {a, (1 - entropy2(a)) / std::log2(1 + v)};
}

MarkovChain transition_matrix(int n, int d) {
    if (d < 1 || d > n) throw structural_error("transition_matrix needs 1 <= d <= n");
    MarkovChain mc;
    mc.n = n;
    mc.d = d;
    mc.a.assign(n + 1, std::vector<double>(n + 1, 0.0));
    Rat total(binom(n, d));
    for (int q = 0; q <= n; ++q)
        for (int p = 0; p <= n; ++p) {
            if ((q + d - p) % 2 != 0) continue;
            BigInt ways = binom(q, (q + d - p) / 2) * binom(n - q, (d - q + p) / 2);
            if (ways == 0) continue;
            mc.a[p][q] = static_cast<double>(Rat(ways) / total);
        }
    return mc;
}

KrawtchoukEigen eigen_krawtchouk(int n, int d) {
    if (d < 1 || d > n) throw structural_error("eigen_krawtchouk needs 1 <= d <= n");
    KrawtchoukEigen ke;
    ke.n = n;
    ke.d = d;
    ke.lambda_den = binom(n, d);
    auto e = [&](int i, int j) {
        BigInt v = 0;
        for (int s = 0; s <= j; ++s) {
            BigInt term = binom(i, s) * binom(n - i, j - s);
            v += (s % 2 == 0) ? term : -term;
        }
        return v;
    };
    for (int i = 0; i <= n; ++i) {
        ke.lambda_num.push_back(e(i, d));
        ke.lambda.push_back(static_cast<double>(Rat(ke.lambda_num[i], ke.lambda_den)));
    }
    ke.u.assign(n + 1, std::vector<double>(n + 1, 0.0));
    for (int p = 0; p <= n; ++p)
        for (int i = 0; i <= n; ++i) ke.u[p][i] = static_cast<double>(e(i, p));
    return ke;
}

DecompositionResidual verify_decomposition(int n, int d) {
    auto mc = transition_matrix(n, d);
    auto ke = eigen_krawtchouk(n, d);
    const int sz = n + 1;
    double inv_scale = std::exp2(double(-n));
    // R = U * diag(lambda) * 2^{-n} U, and W = U * 2^{-n} U.
    DecompositionResidual res{0.0, 0.0};
    for (int p = 0; p < sz; ++p)
        for (int q = 0; q < sz; ++q) {
            double r = 0, w = 0;
            for (int i = 0; i < sz; ++i) {
                double right = inv_scale * ke.u[i][q];
                r += ke.u[p][i] * ke.lambda[i] * right;
                w += ke.u[p][i] * right;
            }
            res.reconstruction = std::max(res.reconstruction, std::abs(r - mc.a[p][q]));
            res.inversion = std::max(res.inversion, std::abs(w - (p == q ? 1.0 : 0.0)));
        }
    return res;
}

double nondegeneracy_bound(int n, int m, int d, int g, int k) {
    if (g > m) throw structural_error("nondegeneracy_bound needs g <= m");
    if (d < 1 || d > n) throw structural_error("nondegeneracy_bound needs 1 <= d <= n");
    BigInt den = binom(n, d);
    double inner_total = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n / 2; ++i) {
        BigInt num = 0;
        for (int s = 0; s <= d; ++s) {
            BigInt term = binom(i, s) * binom(n - i, d - s);
            num += (s % 2 == 0) ? term : -term;
        }
        if (num == 0) continue;
        double log2_abs_lambda =
            static_cast<double>(std::log2(abs(Rat(num, den)).convert_to<double>()));
        double tail = -std::numeric_limits<double>::infinity();
        for (int t = g; t <= m; ++t)
            tail = log2_sum(tail, log2_binom(m, t) + t * log2_abs_lambda);
        inner_total = log2_sum(inner_total, -double(n) + log2_binom(n, i) + tail);
    }
    return 1.0 + k * std::log2(double(n + 1)) + inner_total;
}

DegeneracyEstimate empirical_degeneracy(int n, int m, int d, int s, int k, long long trials,
                                        uint64_t seed) {
    require_cap(m, 24, "empirical_degeneracy check count");
    if (trials < 1) throw structural_error("empirical_degeneracy needs trials >= 1");
    DegeneracyEstimate est;
    est.trials = trials;
    for (long long t = 0; t < trials; ++t) {
        auto g = sample_check_regular(n, m, d, split_seed(seed, uint64_t(t)));
        auto nd = is_nondegenerate(g, s, k, 24);
        if (nd.status == NondegeneracyResult::Status::False) ++est.violations;
    }
    est.freq = double(est.violations) / double(trials);
    auto [lo, hi] = wilson_interval(est.violations, trials);
    est.ci_lo = lo;
    est.ci_hi = hi;
    return est;
}

}  // namespace lplab
