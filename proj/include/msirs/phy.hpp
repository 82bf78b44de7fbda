#ifndef MSIRS_PHY_HPP
#define MSIRS_PHY_HPP

#include <cstdint>
#include <vector>

#include "msirs/rng.hpp"

namespace msirs {

// Mean square of the line alphabet: levels {-1, 0, +1} occur 3:2:3 per
// sample position across the 8 mapping entries, giving 6/8.
inline constexpr double kSignalPower = 0.75;

struct Pam3Pair {
    int even = 0;  // in {-1, 0, +1}
    int odd = 0;

    bool operator==(const Pam3Pair&) const = default;
};

/// 3-bit group -> PAM3 pair. {0,0} is not in the image.
Pam3Pair pam3_map(unsigned bits);

/// Inverse of pam3_map on the 8 valid pairs; the unused {0,0} decodes to 000.
unsigned pam3_demap(const Pam3Pair& pair);

struct ChannelConfig {
    std::vector<double> taps;  // h[0] = main cursor, rest postcursor-only
    double snr_db = 30.0;      // +inf disables AWGN
    double sbr_db = 10.0;      // +inf disables burst noise
    int burst_duration = 0;    // in mapper symbols (one symbol = 2 line samples)
    int burst_period = 1;
    int burst_phase = 0;
    uint64_t seed = 0;

    void validate() const;  // throws std::invalid_argument
};

// Stand-in severe-ISI response (main cursor below the early postcursors, long
// tail) so a burst of wrong slicer decisions keeps regenerating through the
// DFE feedback for a while after the burst ends. No particular physical link
// is modeled; taps are configurable and recorded in output.
std::vector<double> default_channel_taps();

/// Linear convolution, zero initial state, output truncated to input length.
std::vector<double> channel_apply(const std::vector<double>& samples,
                                  const std::vector<double>& taps);

/// Adds AWGN at snr_db over every sample plus an independent Gaussian burst
/// at sbr_db over samples whose mapper-symbol index j satisfies
/// (j - burst_phase) mod burst_period < burst_duration. Noise power is
/// relative to kSignalPower.
std::vector<double> noise_inject(const std::vector<double>& samples,
                                 const ChannelConfig& cfg, Rng& rng);

/// slice(v): -1 below -0.5, +1 above +0.5, else 0 (thresholds map to 0).
int pam3_slice(double v);

/// Zero-forcing DFE: cancels postcursor ISI with past decisions, then
/// slices. Wrong decisions feed back (error propagation).
std::vector<int> dfe_equalize(const std::vector<double>& received,
                              const std::vector<double>& taps);

// Bit-level helpers used by the simulation pipeline: m-bit symbols are
// emitted most-significant 3-bit group first.
std::vector<double> map_symbols_to_samples(const std::vector<unsigned>& symbols, int m);
std::vector<unsigned> demap_levels_to_symbols(const std::vector<int>& levels, int m);

} // namespace msirs

#endif
