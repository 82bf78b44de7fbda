#include "msirs/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "msirs/analysis.hpp"
#include "msirs/two_pass.hpp"

namespace msirs {

namespace {

constexpr uint64_t kStreamMessage = 0x6d736721;
constexpr uint64_t kStreamNoise = 0x6e6f6973;

std::string fmt_g6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct SchemeRuntime {
    const SchemeConfig* cfg;
    RsCode code;
    InterleaverConfig il;
    long info_bits_per_frame;
    long mapper_symbols_per_frame;
};

} // namespace

void ExperimentConfig::validate() const {
    if (schemes.empty()) throw std::invalid_argument("ExperimentConfig: no schemes");
    for (const auto& s : schemes) {
        if (s.label.empty()) throw std::invalid_argument("ExperimentConfig: scheme needs a label");
        if (s.n <= 0 || s.k <= 0 || s.k >= s.n)
            throw std::invalid_argument("ExperimentConfig: bad (n, k) in scheme " + s.label);
        if (s.L < 1 || s.BL < 1 || s.n % s.BL != 0)
            throw std::invalid_argument("ExperimentConfig: bad (L, BL) in scheme " + s.label);
        if (static_cast<long>(s.n) * s.L * s.m % 3 != 0)
            throw std::invalid_argument("ExperimentConfig: frame bits of scheme " + s.label +
                                        " must be divisible by 3 for PAM3 mapping");
    }
    if (sbr_step_db <= 0 || sbr_max_db < sbr_min_db)
        throw std::invalid_argument("ExperimentConfig: empty SBR sweep");
    if (frames_per_point < 1)
        throw std::invalid_argument("ExperimentConfig: frames_per_point must be >= 1");
    ChannelConfig cc{taps, snr_db, 0.0, burst_duration, burst_period, burst_phase, seed};
    cc.validate();
}

std::vector<double> ExperimentConfig::sbr_points() const {
    std::vector<double> pts;
    int count = static_cast<int>(std::floor((sbr_max_db - sbr_min_db) / sbr_step_db + 1e-9)) + 1;
    for (int i = 0; i < count; ++i) pts.push_back(sbr_min_db + i * sbr_step_db);
    return pts;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();

    std::vector<SchemeRuntime> runtimes;
    runtimes.reserve(cfg.schemes.size());
    for (const auto& s : cfg.schemes) {
        Field field(s.m, Field::default_poly(s.m));
        runtimes.push_back(SchemeRuntime{
            &s,
            RsCode(field, s.n, s.k),
            InterleaverConfig(s.L, s.BL, s.n),
            static_cast<long>(s.k) * s.m * s.L,
            static_cast<long>(s.n) * s.m * s.L / 3,
        });
    }

    const auto points = cfg.sbr_points();
    std::vector<ResultRow> rows;

    for (size_t rt_i = 0; rt_i < runtimes.size(); ++rt_i) {
        const auto& rt = runtimes[rt_i];
        const auto& sc = *rt.cfg;

        for (size_t pt = 0; pt < points.size(); ++pt) {
            ResultRow row;
            row.scheme = sc.label;
            row.sbr_db = points[pt];
            row.frames = cfg.frames_per_point;
            row.info_bits = rt.info_bits_per_frame * cfg.frames_per_point;

            for (int fr = 0; fr < cfg.frames_per_point; ++fr) {
                const uint64_t trial = (static_cast<uint64_t>(pt) << 32) |
                                       static_cast<uint64_t>(fr);

                // message bits, shared across schemes with equal payloads
                Rng msg_rng(cfg.seed, trial, kStreamMessage);
                std::vector<std::vector<unsigned>> messages(static_cast<size_t>(sc.L));
                for (auto& msg : messages) {
                    msg.resize(static_cast<size_t>(sc.k), 0);
                    for (int i = 0; i < sc.k; ++i)
                        for (int b = 0; b < sc.m; ++b)
                            msg[static_cast<size_t>(i)] =
                                (msg[static_cast<size_t>(i)] << 1) |
                                static_cast<unsigned>(msg_rng.next_bit());
                }

                std::vector<std::vector<unsigned>> codewords;
                codewords.reserve(static_cast<size_t>(sc.L));
                for (const auto& msg : messages) codewords.push_back(rt.code.encode(msg));

                auto stream = interleave(rt.il, codewords);
                auto samples = map_symbols_to_samples(stream, sc.m);
                auto channeled = channel_apply(samples, cfg.taps);

                // burst phase relative to this frame's place in the symbol stream
                ChannelConfig cc;
                cc.taps = cfg.taps;
                cc.snr_db = cfg.snr_db;
                cc.sbr_db = points[pt];
                cc.burst_duration = cfg.burst_duration;
                cc.burst_period = cfg.burst_period;
                long offset = (static_cast<long>(cfg.burst_phase) -
                               static_cast<long>(fr) * rt.mapper_symbols_per_frame) %
                              cfg.burst_period;
                if (offset < 0) offset += cfg.burst_period;
                cc.burst_phase = static_cast<int>(offset);
                cc.seed = cfg.seed;

                Rng noise_rng(cfg.seed, trial, kStreamNoise);
                auto noisy = noise_inject(channeled, cc, noise_rng);

                auto levels = dfe_equalize(noisy, cfg.taps);
                auto rx_stream = demap_levels_to_symbols(levels, sc.m);
                rx_stream.resize(stream.size());
                auto rx_codewords = deinterleave(rt.il, rx_stream);

                // decode and count message-bit errors, falling back to the
                // received systematic symbols when a codeword stays failed
                long frame_bit_errors = 0;
                auto count_cw = [&](int c, const DecodeResult& res) {
                    const auto& rx = res.success ? res.codeword
                                                 : rx_codewords[static_cast<size_t>(c)];
                    for (int i = 0; i < sc.k; ++i) {
                        unsigned diff = rx[static_cast<size_t>(i)] ^
                                        messages[static_cast<size_t>(c)][static_cast<size_t>(i)];
                        frame_bit_errors += __builtin_popcount(diff);
                    }
                };

                if (sc.decoder == DecoderKind::two_pass) {
                    auto outcome = decode_frame(rt.code, rt.il, rx_stream);
                    for (int c = 0; c < sc.L; ++c)
                        count_cw(c, outcome.final[static_cast<size_t>(c)]);
                } else {
                    auto results = first_pass(rt.code, rt.il, rx_stream);
                    for (int c = 0; c < sc.L; ++c)
                        count_cw(c, results[static_cast<size_t>(c)]);
                }

                row.bit_errors += frame_bit_errors;
                if (frame_bit_errors > 0) ++row.block_errors;
            }

            row.ber = row.info_bits ? static_cast<double>(row.bit_errors) / row.info_bits : 0;
            row.bler = row.frames ? static_cast<double>(row.block_errors) / row.frames : 0;
            rows.push_back(std::move(row));
        }
    }

    std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
        if (a.scheme != b.scheme) return a.scheme < b.scheme;
        return a.sbr_db < b.sbr_db;
    });
    return rows;
}

std::string emit_results(const std::vector<ResultRow>& rows, uint64_t seed,
                         const std::vector<double>& taps) {
    if (rows.empty()) throw std::invalid_argument("emit_results: no rows");
    std::ostringstream os;
    os << "# seed=" << seed << " psig=" << fmt_g6(kSignalPower) << " taps=";
    for (size_t i = 0; i < taps.size(); ++i) {
        if (i) os << ',';
        os << fmt_g6(taps[i]);
    }
    os << '\n';
    os << "scheme,sbr_db,frames,info_bits,bit_errors,ber,block_errors,bler\n";
    for (const auto& r : rows) {
        os << r.scheme << ',' << fmt_g6(r.sbr_db) << ',' << r.frames << ',' << r.info_bits
           << ',' << r.bit_errors << ',' << fmt_g6(r.ber) << ',' << r.block_errors << ','
           << fmt_g6(r.bler) << '\n';
    }
    return os.str();
}

std::vector<ResultRow> parse_results(const std::string& csv) {
    std::vector<ResultRow> rows;
    std::istringstream is(csv);
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        std::istringstream ls(line);
        ResultRow r;
        std::string field;
        std::getline(ls, r.scheme, ',');
        std::getline(ls, field, ','); r.sbr_db = std::stod(field);
        std::getline(ls, field, ','); r.frames = std::stol(field);
        std::getline(ls, field, ','); r.info_bits = std::stol(field);
        std::getline(ls, field, ','); r.bit_errors = std::stol(field);
        std::getline(ls, field, ','); r.ber = std::stod(field);
        std::getline(ls, field, ','); r.block_errors = std::stol(field);
        std::getline(ls, field, ','); r.bler = std::stod(field);
        rows.push_back(std::move(r));
    }
    return rows;
}

BurstSweepResult burst_sweep(const RsCode& code, const InterleaverConfig& il,
                             DecoderKind decoder, long max_bits, uint64_t seed) {
    const int m = code.field().m();
    const long total_bits = static_cast<long>(il.frame_symbols()) * m;
    if (max_bits < 1 || max_bits > total_bits)
        throw std::invalid_argument("burst_sweep: max_bits must be in [1, frame bits]");

    Rng rng(seed, 0, 0x73776565);
    std::vector<std::vector<unsigned>> messages(static_cast<size_t>(il.L));
    std::vector<std::vector<unsigned>> codewords;
    for (auto& msg : messages) {
        msg.resize(static_cast<size_t>(code.k()));
        for (auto& s : msg) s = static_cast<unsigned>(rng.below(code.field().size()));
        codewords.push_back(code.encode(msg));
    }
    const auto clean = interleave(il, codewords);

    auto recovers = [&](const std::vector<unsigned>& frame) {
        if (decoder == DecoderKind::two_pass) {
            auto outcome = decode_frame(code, il, frame);
            if (!outcome.frame_success) return false;
            for (int c = 0; c < il.L; ++c)
                if (outcome.final[static_cast<size_t>(c)].codeword != codewords[static_cast<size_t>(c)])
                    return false;
        } else {
            auto results = first_pass(code, il, frame);
            for (int c = 0; c < il.L; ++c)
                if (!results[static_cast<size_t>(c)].success ||
                    results[static_cast<size_t>(c)].codeword != codewords[static_cast<size_t>(c)])
                    return false;
        }
        return true;
    };

    BurstSweepResult res;
    res.total_bits = total_bits;
    if (decoder == DecoderKind::two_pass)
        res.formula_bits = il.BL <= code.t()
                               ? becc_bits(Scheme::ms_irs, il.L, code.t(), il.BL, m)
                               : -1;  // outside the stated formula regime
    else
        res.formula_bits = becc_bits(Scheme::ss_irs, il.L, code.t(), il.BL, m);
    res.max_guaranteed_bits = max_bits;

    std::vector<unsigned> frame(clean);
    for (long len = 1; len <= max_bits; ++len) {
        for (long start = 0; start + len <= total_bits; ++start) {
            frame = clean;
            for (long b = start; b < start + len; ++b) {
                long sym = b / m;
                int bit = m - 1 - static_cast<int>(b % m);  // MSB-first within a symbol
                frame[static_cast<size_t>(sym)] ^= 1u << bit;
            }
            if (!recovers(frame)) {
                res.first_failing_bits = len;
                res.max_guaranteed_bits = len - 1;
                return res;
            }
        }
    }
    return res;
}

ExperimentConfig case1_preset() {
    ExperimentConfig cfg;
    cfg.schemes = {
        {"rs432x387_L1_single", 432, 387, 9, 1, 432, DecoderKind::single_pass},
        {"rs144x129_L3_BL6_single", 144, 129, 9, 3, 6, DecoderKind::single_pass},
        {"rs144x129_L3_BL6_two_pass", 144, 129, 9, 3, 6, DecoderKind::two_pass},
    };
    cfg.burst_duration = 38;
    cfg.burst_period = 5400;
    cfg.snr_db = 30.0;
    cfg.sbr_min_db = -4.0;
    cfg.sbr_max_db = 20.0;
    cfg.sbr_step_db = 2.0;
    return cfg;
}

ExperimentConfig case2_preset() {
    ExperimentConfig cfg;
    cfg.schemes = {
        {"rs147x132_L3_BL7_two_pass", 147, 132, 9, 3, 7, DecoderKind::two_pass},
        {"rs144x129_L3_BL6_two_pass", 144, 129, 9, 3, 6, DecoderKind::two_pass},
    };
    cfg.burst_duration = 114;
    cfg.burst_period = 5400;
    cfg.snr_db = 30.0;
    cfg.sbr_min_db = -4.0;
    cfg.sbr_max_db = 20.0;
    cfg.sbr_step_db = 2.0;
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);

    ExperimentConfig cfg;
    SchemeConfig sc;
    sc.label = "scheme";
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));

        if (key == "label") sc.label = val;
        else if (key == "n") sc.n = std::stoi(val);
        else if (key == "k") sc.k = std::stoi(val);
        else if (key == "m") sc.m = std::stoi(val);
        else if (key == "L") sc.L = std::stoi(val);
        else if (key == "BL") sc.BL = std::stoi(val);
        else if (key == "decoder") {
            if (val == "single_pass") sc.decoder = DecoderKind::single_pass;
            else if (val == "two_pass") sc.decoder = DecoderKind::two_pass;
            else throw std::runtime_error(path + ": decoder must be single_pass or two_pass");
        }
        else if (key == "snr_db") cfg.snr_db = std::stod(val);
        else if (key == "sbr_min_db") cfg.sbr_min_db = std::stod(val);
        else if (key == "sbr_max_db") cfg.sbr_max_db = std::stod(val);
        else if (key == "sbr_step_db") cfg.sbr_step_db = std::stod(val);
        else if (key == "burst_duration") cfg.burst_duration = std::stoi(val);
        else if (key == "burst_period") cfg.burst_period = std::stoi(val);
        else if (key == "burst_phase") cfg.burst_phase = std::stoi(val);
        else if (key == "frames") cfg.frames_per_point = std::stoi(val);
        else if (key == "seed") cfg.seed = std::stoull(val);
        else if (key == "taps") {
            cfg.taps.clear();
            std::istringstream ts(val);
            std::string tok;
            while (std::getline(ts, tok, ',')) cfg.taps.push_back(std::stod(tok));
        }
        else throw std::runtime_error(path + ": unknown key '" + key + "'");
    }
    cfg.schemes = {sc};
    return cfg;
}

} // namespace msirs
