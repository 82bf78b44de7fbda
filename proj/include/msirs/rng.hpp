#ifndef MSIRS_RNG_HPP
#define MSIRS_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace msirs {

/// Deterministic counter-seeded stream: an mt19937_64 keyed by a splitmix64
/// mix of (seed, stream ids), so (seed, point, frame) always yields the same
/// draws regardless of what other streams exist. Gaussians come from an
/// explicit Box-Muller transform, keeping the byte stream pinned to this
/// code rather than to a library's distribution internals.
class Rng {
public:
    explicit Rng(uint64_t seed, uint64_t stream_a = 0, uint64_t stream_b = 0)
        : engine_(mix(mix(mix(seed) ^ stream_a) ^ stream_b)) {}

    uint64_t next_u64() { return engine_(); }

    bool next_bit() { return (engine_() >> 63) != 0; }

    // uniform in [0, 1)
    double uniform() { return (engine_() >> 11) * 0x1.0p-53; }

    // standard normal via Box-Muller, pairs cached
    double gaussian() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double rad = std::sqrt(-2.0 * std::log(u1));
        double ang = 6.283185307179586476925286766559 * u2;
        cached_ = rad * std::sin(ang);
        has_cached_ = true;
        return rad * std::cos(ang);
    }

    // uniform integer in [0, bound)
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
        for (;;) {
            uint64_t v = engine_();
            if (v >= threshold) return v % bound;
        }
    }

private:
    static uint64_t mix(uint64_t z) {  // splitmix64 finalizer
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
    double cached_ = 0;
    bool has_cached_ = false;
};

} // namespace msirs

#endif
