#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "msirs/analysis.hpp"
#include "msirs/sim.hpp"

namespace {

int cmd_simulate(const std::string& preset, const std::string& config_path,
                 bool has_sbr_min, double sbr_min, bool has_sbr_max, double sbr_max,
                 bool has_sbr_step, double sbr_step, int frames, uint64_t seed,
                 bool has_seed, const std::string& out_path) {
    msirs::ExperimentConfig cfg;
    if (!preset.empty()) {
        if (preset == "case1") cfg = msirs::case1_preset();
        else if (preset == "case2") cfg = msirs::case2_preset();
        else {
            std::cerr << "unknown preset: " << preset << "\n";
            return 1;
        }
    } else if (!config_path.empty()) {
        cfg = msirs::load_config_file(config_path);
    } else {
        std::cerr << "simulate: need --preset or --config\n";
        return 1;
    }

    if (has_sbr_min) cfg.sbr_min_db = sbr_min;
    if (has_sbr_max) cfg.sbr_max_db = sbr_max;
    if (has_sbr_step) cfg.sbr_step_db = sbr_step;
    if (frames > 0) cfg.frames_per_point = frames;
    if (has_seed) cfg.seed = seed;

    auto rows = msirs::run_experiment(cfg);
    std::string csv = msirs::emit_results(rows, cfg.seed, cfg.taps);
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 1;
        }
        out << csv;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MS-IRS coding toolkit: BECC analysis and PAM3 burst-noise simulation"};
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "Run a Monte-Carlo BER/BLER sweep, emit CSV");
    std::string preset, config_path, out_path;
    double sbr_min = 0, sbr_max = 0, sbr_step = 0;
    int frames = 0;
    uint64_t seed = 0;
    sim->add_option("--preset", preset, "case1 or case2");
    sim->add_option("--config", config_path, "key = value config file");
    auto* omin = sim->add_option("--sbr-min", sbr_min, "sweep start (dB)");
    auto* omax = sim->add_option("--sbr-max", sbr_max, "sweep end (dB)");
    auto* ostep = sim->add_option("--sbr-step", sbr_step, "sweep step (dB)");
    sim->add_option("--frames", frames, "frames per SBR point");
    auto* oseed = sim->add_option("--seed", seed, "RNG seed");
    sim->add_option("--out", out_path, "output CSV file (default stdout)");

    // becc
    auto* becc = app.add_subcommand("becc", "Closed-form worst-case BECC in bits");
    std::string scheme = "ms";
    int L = 3, t = 7, BL = 6, m = 9;
    becc->add_option("--scheme", scheme, "ss or ms")->check(CLI::IsMember({"ss", "ms"}));
    becc->add_option("-L,--depth", L, "interleave depth");
    becc->add_option("-t,--t", t, "symbol correction capability");
    becc->add_option("--bl", BL, "symbols per dispatch (ms only)");
    becc->add_option("-m,--m", m, "bits per symbol");

    // latency
    auto* lat = app.add_subcommand("latency", "FEC latency accounting");
    int ln = 108, lk = 96, lm = 9, lL = 4;
    double rate_bps = 1e9, decode_ns = 120;
    lat->add_option("--n", ln, "codeword symbols")->required();
    lat->add_option("--k", lk, "message symbols")->required();
    lat->add_option("--m", lm, "bits per symbol")->required();
    lat->add_option("-L,--depth", lL, "interleave depth")->required();
    lat->add_option("--rate-bps", rate_bps, "line rate in bits/s")->required();
    lat->add_option("--decode-ns", decode_ns, "decoding budget in ns");

    // burst-sweep
    auto* sweep = app.add_subcommand("burst-sweep",
                                     "Exhaustive burst verification vs the formula value");
    int sn = 12, sk = 4, sm = 4, sL = 3, sBL = 3;
    long max_bits = 0;
    uint64_t sweep_seed = 1;
    bool single_pass = false;
    sweep->add_option("--n", sn, "codeword symbols")->required();
    sweep->add_option("--k", sk, "message symbols")->required();
    sweep->add_option("--m", sm, "bits per symbol")->required();
    sweep->add_option("-L,--depth", sL, "interleave depth")->required();
    sweep->add_option("--bl", sBL, "symbols per dispatch")->required();
    sweep->add_option("--max-bits", max_bits, "longest burst to try (default: formula + 3m)");
    sweep->add_option("--seed", sweep_seed, "RNG seed for the probe frame");
    sweep->add_flag("--single-pass", single_pass, "first-pass decoding only");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed())
            return cmd_simulate(preset, config_path, omin->count() > 0, sbr_min,
                                omax->count() > 0, sbr_max, ostep->count() > 0, sbr_step,
                                frames, seed, oseed->count() > 0, out_path);

        if (becc->parsed()) {
            auto s = scheme == "ss" ? msirs::Scheme::ss_irs : msirs::Scheme::ms_irs;
            std::cout << msirs::becc_bits(s, L, t, BL, m) << "\n";
            return 0;
        }

        if (lat->parsed()) {
            auto lb = msirs::latency(ln, lk, lm, lL, rate_bps, decode_ns);
            std::cout << "buffering_ns=" << lb.buffering_ns << "\n"
                      << "receiving_ns=" << lb.receiving_ns << "\n"
                      << "decoding_budget_ns=" << lb.decoding_budget_ns << "\n"
                      << "total_ns=" << lb.total_ns << "\n";
            return 0;
        }

        if (sweep->parsed()) {
            msirs::Field field(sm, msirs::Field::default_poly(sm));
            msirs::RsCode code(field, sn, sk);
            msirs::InterleaverConfig il(sL, sBL, sn);
            auto kind = single_pass ? msirs::DecoderKind::single_pass
                                    : msirs::DecoderKind::two_pass;
            long formula = single_pass
                               ? msirs::becc_bits(msirs::Scheme::ss_irs, sL, code.t(), sBL, sm)
                               : (sBL <= code.t()
                                      ? msirs::becc_bits(msirs::Scheme::ms_irs, sL, code.t(), sBL, sm)
                                      : -1);
            if (max_bits <= 0) max_bits = (formula > 0 ? formula : 4L * sBL * sm) + 3 * sm;
            auto res = msirs::burst_sweep(code, il, kind, max_bits, sweep_seed);
            std::cout << "frame_bits=" << res.total_bits << "\n"
                      << "formula_becc_bits=" << res.formula_bits << "\n"
                      << "empirical_guaranteed_bits=" << res.max_guaranteed_bits << "\n"
                      << "first_failing_bits=" << res.first_failing_bits << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
