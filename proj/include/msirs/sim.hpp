#ifndef MSIRS_SIM_HPP
#define MSIRS_SIM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "msirs/interleaver.hpp"
#include "msirs/phy.hpp"

namespace msirs {

enum class DecoderKind { single_pass, two_pass };

struct SchemeConfig {
    std::string label;
    int n = 0, k = 0, m = 9;
    int L = 1, BL = 1;
    DecoderKind decoder = DecoderKind::single_pass;
};

struct ExperimentConfig {
    std::vector<SchemeConfig> schemes;

    std::vector<double> taps = default_channel_taps();
    double snr_db = 30.0;
    int burst_duration = 38;   // mapper symbols
    int burst_period = 5400;
    int burst_phase = 0;       // burst position in the continuous symbol stream

    double sbr_min_db = -4.0;
    double sbr_max_db = 20.0;
    double sbr_step_db = 2.0;
    int frames_per_point = 200;
    uint64_t seed = 1;

    void validate() const;
    std::vector<double> sbr_points() const;
};

struct ResultRow {
    std::string scheme;
    double sbr_db = 0;
    long frames = 0;
    long info_bits = 0;
    long bit_errors = 0;
    double ber = 0;
    long block_errors = 0;
    double bler = 0;
};

/// Full pipeline per frame: message -> RS encode -> interleave -> PAM3 map ->
/// channel -> AWGN + periodic burst -> DFE -> demap -> deinterleave ->
/// decode. Message and noise streams are keyed by (seed, point, frame) only,
/// so every scheme sees common random numbers. Deterministic for a fixed
/// config.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

/// CSV with a provenance comment line, a header, and one row per
/// (scheme, sbr point), sorted. Floating values use 6 significant digits.
std::string emit_results(const std::vector<ResultRow>& rows, uint64_t seed,
                         const std::vector<double>& taps);

std::vector<ResultRow> parse_results(const std::string& csv);

struct BurstSweepResult {
    long total_bits = 0;        // frame size in bits
    long formula_bits = 0;      // closed-form worst-case guarantee
    long max_guaranteed_bits = 0;  // largest B with every burst <= B recovered
    long first_failing_bits = -1;  // -1 when nothing failed up to max_bits
};

/// Exhaustive all-invert burst sweep over every start bit and every length
/// up to max_bits, against a fixed random frame. Recovery means every
/// component codeword decodes back to the transmitted one.
BurstSweepResult burst_sweep(const RsCode& code, const InterleaverConfig& il,
                             DecoderKind decoder, long max_bits, uint64_t seed);

ExperimentConfig case1_preset();
ExperimentConfig case2_preset();

/// Flat key=value config (comments with '#'). Unknown keys are an error.
ExperimentConfig load_config_file(const std::string& path);

} // namespace msirs

#endif
