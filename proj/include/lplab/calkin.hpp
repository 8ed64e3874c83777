#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lplab/rational.hpp"

namespace lplab {

/// f_d(alpha, beta) = -1 + H(alpha) + beta * log2(1 + (1-2 alpha)^d).
double f_d(double alpha, double beta, int d);

struct CalkinThreshold {
    double alpha;
    double beta;
};

/// The critical row ratio: minimum over alpha in (0, 1/2) of
/// beta(alpha) = (1 - H(alpha)) / log2(1 + (1-2 alpha)^d), located by
/// bisection on the sign of the derivative. Requires d >= 3.
CalkinThreshold beta_d(int d, double tol = 1e-10);

/// Column-stochastic weight-walk transition matrix: a[p][q] is the
/// probability that adding a uniform weight-d word to a weight-q word gives
/// weight p.
struct MarkovChain {
    int n = 0;
    int d = 0;
    std::vector<std::vector<double>> a;  // (n+1) x (n+1)
};

MarkovChain transition_matrix(int n, int d);

/// Krawtchouk eigensystem of the weight walk. Column i of u is the
/// eigenvector with components u[p][i] = e(i,p) = sum_s (-1)^s C(i,s)
/// C(n-i, p-s); the inverse of u is 2^{-n} u.
struct KrawtchoukEigen {
    int n = 0;
    int d = 0;
    std::vector<BigInt> lambda_num;  // lambda_i = lambda_num[i] / C(n,d), exact
    BigInt lambda_den;
    std::vector<double> lambda;
    std::vector<std::vector<double>> u;  // (n+1) x (n+1)
};

KrawtchoukEigen eigen_krawtchouk(int n, int d);

/// Max-norm residuals of A - U L (2^{-n} U) and U (2^{-n} U) - I.
struct DecompositionResidual {
    double reconstruction;
    double inversion;
};

DecompositionResidual verify_decomposition(int n, int d);

/// log2 of the analytic bound 2 (n+1)^k sum_i 2^{-n} C(n,i)
/// sum_{t=g..m} C(m,t) |lambda_i|^t on the probability that some subset of
/// >= g of m random weight-d rows sums to weight <= k. Log-domain throughout.
double nondegeneracy_bound(int n, int m, int d, int g, int k);

struct DegeneracyEstimate {
    long long trials = 0;
    long long violations = 0;
    double freq = 0;
    double ci_lo = 0;
    double ci_hi = 0;
};

/// Samples check-regular graphs and tests (s,k)-nondegeneracy exhaustively
/// (m <= 24); reports the violation frequency with a Wilson 95% interval.
DegeneracyEstimate empirical_degeneracy(int n, int m, int d, int s, int k, long long trials,
                                        std::uint64_t seed);

}  // namespace lplab
