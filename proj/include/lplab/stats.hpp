#pragma once

#include <cmath>
#include <utility>

namespace lplab {

/// Wilson score interval for a binomial proportion (default 95%).
inline std::pair<double, double> wilson_interval(long long successes, long long trials,
                                                 double z = 1.959963984540054) {
    if (trials <= 0) return {0.0, 1.0};
    double p = double(successes) / double(trials);
    double nz = z * z / trials;
    double center = (p + nz / 2) / (1 + nz);
    double half = z * std::sqrt(p * (1 - p) / trials + nz / (4 * trials)) / (1 + nz);
    double lo = center - half, hi = center + half;
    if (lo < 0) lo = 0;
    if (hi > 1) hi = 1;
    return {lo, hi};
}

}  // namespace lplab
