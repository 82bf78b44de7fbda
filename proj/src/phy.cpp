#include "msirs/phy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace msirs {

namespace {

constexpr Pam3Pair kMapTable[8] = {
    {-1, -1},  // 000
    {-1, 0},   // 001
    {-1, +1},  // 010
    {0, -1},   // 011
    {0, +1},   // 100
    {+1, -1},  // 101
    {+1, 0},   // 110
    {+1, +1},  // 111
};

} // namespace

Pam3Pair pam3_map(unsigned bits) {
    if (bits >= 8) throw std::invalid_argument("pam3_map: input must be a 3-bit group");
    return kMapTable[bits];
}

unsigned pam3_demap(const Pam3Pair& pair) {
    for (unsigned b = 0; b < 8; ++b)
        if (kMapTable[b] == pair) return b;
    return 0;  // {0,0} never transmitted; fixed fallback
}

void ChannelConfig::validate() const {
    if (taps.empty()) throw std::invalid_argument("ChannelConfig: taps must be nonempty");
    if (taps[0] == 0.0)
        throw std::invalid_argument("ChannelConfig: main cursor h[0] must be nonzero");
    if (burst_duration < 0 || burst_period <= 0 || burst_phase < 0)
        throw std::invalid_argument("ChannelConfig: burst duration/period/phase out of range");
    if (burst_duration > burst_period)
        throw std::invalid_argument("ChannelConfig: burst duration must not exceed period");
}

std::vector<double> default_channel_taps() {
    return {0.45, 0.8, 0.7, 0.55, 0.42, 0.32, 0.22, 0.15, 0.09};
}

std::vector<double> channel_apply(const std::vector<double>& samples,
                                  const std::vector<double>& taps) {
    if (taps.empty()) throw std::invalid_argument("channel_apply: taps must be nonempty");
    std::vector<double> out(samples.size(), 0.0);
    for (size_t i = 0; i < samples.size(); ++i) {
        double acc = 0;
        for (size_t k = 0; k < taps.size() && k <= i; ++k) acc += taps[k] * samples[i - k];
        out[i] = acc;
    }
    return out;
}

std::vector<double> noise_inject(const std::vector<double>& samples,
                                 const ChannelConfig& cfg, Rng& rng) {
    cfg.validate();
    std::vector<double> out(samples);

    if (std::isfinite(cfg.snr_db)) {
        double sigma = std::sqrt(kSignalPower * std::pow(10.0, -cfg.snr_db / 10.0));
        for (double& v : out) v += sigma * rng.gaussian();
    }
    if (std::isfinite(cfg.sbr_db) && cfg.burst_duration > 0) {
        double sigma = std::sqrt(kSignalPower * std::pow(10.0, -cfg.sbr_db / 10.0));
        for (size_t i = 0; i < out.size(); ++i) {
            long sym = static_cast<long>(i) / 2;  // mapper symbol index
            long rel = (sym - cfg.burst_phase) % cfg.burst_period;
            if (rel < 0) rel += cfg.burst_period;
            if (rel < cfg.burst_duration) out[i] += sigma * rng.gaussian();
        }
    }
    return out;
}

int pam3_slice(double v) {
    if (v < -0.5) return -1;
    if (v > 0.5) return 1;
    return 0;
}

std::vector<int> dfe_equalize(const std::vector<double>& received,
                              const std::vector<double>& taps) {
    if (taps.empty() || taps[0] == 0.0)
        throw std::invalid_argument("dfe_equalize: need a nonzero leading tap");
    std::vector<int> decisions(received.size(), 0);
    for (size_t i = 0; i < received.size(); ++i) {
        double acc = received[i];
        for (size_t k = 1; k < taps.size() && k <= i; ++k)
            acc -= taps[k] * decisions[i - k];
        decisions[i] = pam3_slice(acc / taps[0]);
    }
    return decisions;
}

std::vector<double> map_symbols_to_samples(const std::vector<unsigned>& symbols, int m) {
    if (m < 1) throw std::invalid_argument("map_symbols_to_samples: m must be positive");
    std::vector<bool> bits;
    bits.reserve(symbols.size() * static_cast<size_t>(m));
    for (unsigned s : symbols)
        for (int b = m - 1; b >= 0; --b) bits.push_back((s >> b) & 1u);
    while (bits.size() % 3 != 0) bits.push_back(false);  // zero-pad the tail group

    std::vector<double> samples;
    samples.reserve(2 * bits.size() / 3);
    for (size_t i = 0; i < bits.size(); i += 3) {
        unsigned g = (bits[i] << 2) | (bits[i + 1] << 1) | static_cast<unsigned>(bits[i + 2]);
        Pam3Pair p = pam3_map(g);
        samples.push_back(p.even);
        samples.push_back(p.odd);
    }
    return samples;
}

std::vector<unsigned> demap_levels_to_symbols(const std::vector<int>& levels, int m) {
    if (m < 1) throw std::invalid_argument("demap_levels_to_symbols: m must be positive");
    if (levels.size() % 2 != 0)
        throw std::invalid_argument("demap_levels_to_symbols: need an even sample count");
    std::vector<bool> bits;
    bits.reserve(levels.size() / 2 * 3);
    for (size_t i = 0; i < levels.size(); i += 2) {
        unsigned g = pam3_demap({levels[i], levels[i + 1]});
        bits.push_back((g >> 2) & 1u);
        bits.push_back((g >> 1) & 1u);
        bits.push_back(g & 1u);
    }
    size_t nsym = bits.size() / static_cast<size_t>(m);
    std::vector<unsigned> symbols(nsym, 0);
    for (size_t s = 0; s < nsym; ++s)
        for (int b = 0; b < m; ++b)
            symbols[s] = (symbols[s] << 1) | static_cast<unsigned>(bits[s * m + static_cast<size_t>(b)]);
    return symbols;
}

} // namespace msirs
