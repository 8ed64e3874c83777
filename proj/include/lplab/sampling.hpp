#pragma once

#include <cstdint>

#include "lplab/tanner.hpp"

namespace lplab {

/// m independent uniform weight-d rows. Per-row streams are split from the
/// master seed, so the graph is a pure function of (n, m, d, seed).
TannerGraph sample_check_regular(int n, int m, int d, uint64_t seed);

/// Configuration-model graph with every variable of degree exactly d_v and
/// every check of degree n*d_v/m; resamples on parallel edges.
TannerGraph sample_variable_regular(int n, int m, int d_v, uint64_t seed);

}  // namespace lplab
