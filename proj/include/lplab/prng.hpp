#pragma once

#include <cstdint>

namespace lplab {

/// SplitMix64: the counter-based generator used for every random choice in the
/// library. All samplers derive per-row / per-trial streams from a master seed
/// via split_seed, so results are bit-reproducible across platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound >= 1, by rejection.
    uint64_t next_below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0, 1).
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    uint64_t state_;
};

/// Derive the seed of sub-stream `stream` from a master seed.
inline uint64_t split_seed(uint64_t master, uint64_t stream) {
    SplitMix64 g(master ^ (0xA5A5A5A55A5A5A5Aull + stream * 0x9E3779B97F4A7C15ull));
    return g.next();
}

}  // namespace lplab
