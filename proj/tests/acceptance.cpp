// Acceptance suite: runs every release criterion and prints one PASS/FAIL
// line per criterion. Exit status is the number of failed criteria.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "msirs/analysis.hpp"
#include "msirs/sim.hpp"
#include "msirs/two_pass.hpp"
#include "oracle.hpp"

using namespace msirs;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::vector<unsigned> random_message(const RsCode& code, Rng& rng) {
    std::vector<unsigned> msg(static_cast<size_t>(code.k()));
    for (auto& s : msg) s = static_cast<unsigned>(rng.below(code.field().size()));
    return msg;
}

// ---------------------------------------------------------------------------
// 1. Field/codec correctness
// ---------------------------------------------------------------------------

bool random_trials(const RsCode& code, int trials, uint64_t seed) {
    // enumerate all (e, f) with 2e + f <= r and cycle through them
    std::vector<std::pair<int, int>> pairs;
    for (int f = 0; f <= code.r(); ++f)
        for (int e = 0; 2 * e + f <= code.r(); ++e) pairs.emplace_back(e, f);

    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        auto [e, f] = pairs[static_cast<size_t>(trial) % pairs.size()];
        auto msg = random_message(code, rng);
        auto cw = code.encode(msg);
        auto word = cw;

        std::vector<int> perm(static_cast<size_t>(code.n()));
        std::iota(perm.begin(), perm.end(), 0);
        for (size_t i = perm.size(); i > 1; --i)
            std::swap(perm[i - 1], perm[rng.below(i)]);
        std::vector<int> erasures(perm.begin(), perm.begin() + f);
        for (int p : erasures)
            word[static_cast<size_t>(p)] = static_cast<unsigned>(rng.below(code.field().size()));
        for (int i = 0; i < e; ++i)
            word[static_cast<size_t>(perm[static_cast<size_t>(f + i)])] ^=
                static_cast<unsigned>(1 + rng.below(code.field().size() - 1));

        auto res = code.decode(word, erasures);
        if (!res.success || res.codeword != cw) return false;
    }
    return true;
}

void criterion_1() {
    bool ok = true;
    std::string detail;

    struct P { int n, k, m; };
    for (P p : {P{144, 129, 9}, P{147, 132, 9}, P{432, 387, 9}, P{6, 2, 3}}) {
        Field field(p.m, Field::default_poly(p.m));
        RsCode code(field, p.n, p.k);
        if (!random_trials(code, 10000, 0x5EED0000u + static_cast<uint64_t>(p.n))) {
            ok = false;
            detail = "random trials failed for RS(" + std::to_string(p.n) + "," +
                     std::to_string(p.k) + ")";
            break;
        }
    }

    if (ok) {
        // exhaustive oracle agreement on RS(6,2)/GF(8)
        Field field(3, Field::default_poly(3));
        RsCode code(field, 6, 2);
        test::MinDistanceOracle oracle(code);
        long checked = 0;

        for (const auto& cw : oracle.codewords()) {
            // all erasure sets (f <= 4) as bitmask subsets of the 6 positions
            for (unsigned emask = 0; emask < 64 && ok; ++emask) {
                int f = __builtin_popcount(emask);
                if (f > code.r()) continue;
                int max_e = (code.r() - f) / 2;
                std::vector<int> erasures;
                for (int i = 0; i < 6; ++i)
                    if (emask & (1u << i)) erasures.push_back(i);

                // enumerate erased fill values
                std::vector<unsigned> fill(static_cast<size_t>(f), 0);
                for (;;) {
                    auto base = cw;
                    for (int i = 0; i < f; ++i)
                        base[static_cast<size_t>(erasures[static_cast<size_t>(i)])] =
                            fill[static_cast<size_t>(i)];

                    // e = 0
                    auto check = [&](const std::vector<unsigned>& word) {
                        auto got = code.decode(word, erasures);
                        auto expect = oracle.decode(word, erasures);
                        ++checked;
                        if (!expect || *expect != cw || !got.success || got.codeword != cw)
                            ok = false;
                    };
                    check(base);
                    // e = 1, 2 over non-erased positions
                    if (max_e >= 1) {
                        for (int p1 = 0; p1 < 6 && ok; ++p1) {
                            if (emask & (1u << p1)) continue;
                            for (unsigned d1 = 1; d1 < 8 && ok; ++d1) {
                                auto w1 = base;
                                w1[static_cast<size_t>(p1)] ^= d1;
                                check(w1);
                                if (max_e >= 2) {
                                    for (int p2 = p1 + 1; p2 < 6 && ok; ++p2) {
                                        if (emask & (1u << p2)) continue;
                                        for (unsigned d2 = 1; d2 < 8 && ok; ++d2) {
                                            auto w2 = w1;
                                            w2[static_cast<size_t>(p2)] ^= d2;
                                            check(w2);
                                        }
                                    }
                                }
                            }
                        }
                    }

                    int i = f - 1;
                    while (i >= 0 && ++fill[static_cast<size_t>(i)] == 8) {
                        fill[static_cast<size_t>(i)] = 0;
                        --i;
                    }
                    if (i < 0 || !ok) break;
                }
            }
            if (!ok) break;
        }
        if (!ok) detail = "oracle disagreement on RS(6,2)";
        else detail = std::to_string(checked) + " exhaustive patterns + 4x10^4 random trials";
    }

    report(1, "field/codec correctness", ok, detail);
}

// ---------------------------------------------------------------------------
// 2 + 3. BECC sweeps
// ---------------------------------------------------------------------------

BurstSweepResult g_ss_sweep;

void criterion_2() {
    Field field(4, Field::default_poly(4));
    RsCode code(field, 12, 4);
    InterleaverConfig il(3, 1, 12);
    g_ss_sweep = burst_sweep(code, il, DecoderKind::single_pass, 60, 1);

    bool ok = g_ss_sweep.formula_bits == 45 && g_ss_sweep.max_guaranteed_bits >= 45 &&
              g_ss_sweep.first_failing_bits >= 46;
    report(2, "SS-IRS BECC formula (exhaustive sweep)", ok,
           "guaranteed=" + std::to_string(g_ss_sweep.max_guaranteed_bits) +
               " first_fail=" + std::to_string(g_ss_sweep.first_failing_bits) + " formula=45");
}

void criterion_3() {
    Field field(4, Field::default_poly(4));
    RsCode code(field, 12, 4);

    auto bl3 = burst_sweep(code, InterleaverConfig(3, 3, 12), DecoderKind::two_pass, 80, 1);
    auto bl4 = burst_sweep(code, InterleaverConfig(3, 4, 12), DecoderKind::two_pass, 96, 1);

    bool ok = bl3.formula_bits == 49 && bl3.max_guaranteed_bits >= 49;
    ok = ok && bl4.formula_bits == 65 && bl4.max_guaranteed_bits >= 65;

    // near-doubling vs the SS-IRS threshold of criterion 2 at BL = t
    double ratio = static_cast<double>(bl4.max_guaranteed_bits) /
                   static_cast<double>(g_ss_sweep.max_guaranteed_bits);
    ok = ok && ratio >= 1.4;

    report(3, "MS-IRS BECC near-doubling (exhaustive sweeps)", ok,
           "BL=3 guaranteed=" + std::to_string(bl3.max_guaranteed_bits) +
               " (formula 49), BL=4 guaranteed=" + std::to_string(bl4.max_guaranteed_bits) +
               " (formula 65), ms/ss ratio=" + std::to_string(ratio));
}

// ---------------------------------------------------------------------------
// 4. worst-case burst geometry fixture
// ---------------------------------------------------------------------------

void criterion_4() {
    Field field(4, Field::default_poly(4));
    RsCode code(field, 12, 4);
    InterleaverConfig cfg(3, 3, 12);

    Rng rng(4);
    std::vector<std::vector<unsigned>> cws;
    for (int c = 0; c < 3; ++c) cws.push_back(code.encode(random_message(code, rng)));
    auto frame = interleave(cfg, cws);

    // burst from the last symbol of the first code-1 segment (stream position
    // 2) through the end of the second code-2 segment (stream position 14)
    for (int p = 2; p <= 14; ++p) frame[static_cast<size_t>(p)] ^= 0xF;
    // one random error outside the burst in each codeword
    frame[static_cast<size_t>(cfg.position_map(0, 7))] ^= 0x9;
    frame[static_cast<size_t>(cfg.position_map(1, 9))] ^= 0x9;
    frame[static_cast<size_t>(cfg.position_map(2, 3))] ^= 0x9;

    auto fp = first_pass(code, cfg, frame);
    bool single_fails = !(fp[0].success && fp[1].success && fp[2].success);

    auto outcome = decode_frame(code, cfg, frame);
    bool two_pass_ok = outcome.frame_success;
    for (int c = 0; c < 3 && two_pass_ok; ++c)
        two_pass_ok = outcome.final[static_cast<size_t>(c)].codeword == cws[static_cast<size_t>(c)];

    report(4, "worst-case burst geometry fixture", single_fails && two_pass_ok,
           std::string("single-pass ") + (single_fails ? "fails" : "succeeds") +
               ", two-pass " + (two_pass_ok ? "recovers" : "fails"));
}

// ---------------------------------------------------------------------------
// 5 + 6. Closed-form fixtures
// ---------------------------------------------------------------------------

void criterion_5() {
    auto lb = latency(108, 96, 9, 4, 1e9, 120);
    bool ok = lb.buffering_ns == 384.0 && lb.receiving_ns == 3456.0 && lb.total_ns < 4000.0;
    report(5, "latency accounting: 384 ns buffering, 3456 ns receiving, < 4 us total", ok,
           "buffering=" + std::to_string(lb.buffering_ns) +
               " receiving=" + std::to_string(lb.receiving_ns) +
               " total=" + std::to_string(lb.total_ns));
}

void criterion_6() {
    const std::pair<int, int> expect[8] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                           {0, 1},   {1, -1}, {1, 0}, {1, 1}};
    bool ok = true;
    for (unsigned b = 0; b < 8; ++b) {
        auto p = pam3_map(b);
        if (p.even != expect[b].first || p.odd != expect[b].second) ok = false;
        if (pam3_demap(p) != b) ok = false;
    }
    report(6, "PAM3 mapping table, all 8 entries and inverses", ok);
}

// ---------------------------------------------------------------------------
// 7 + 8 + 9. Simulation criteria
// ---------------------------------------------------------------------------

std::map<std::string, std::map<double, ResultRow>> by_scheme(const std::vector<ResultRow>& rows) {
    std::map<std::string, std::map<double, ResultRow>> out;
    for (const auto& r : rows) out[r.scheme][r.sbr_db] = r;
    return out;
}

// normal-approximation half-width of the 95% interval for a proportion
double ci95(long errors, long trials) {
    double p = static_cast<double>(errors) / static_cast<double>(trials);
    return 1.96 * std::sqrt(p * (1 - p) / static_cast<double>(trials));
}

void criterion_7() {
    ExperimentConfig cfg = case1_preset();
    cfg.frames_per_point = 200;
    cfg.seed = 42;
    auto rows = run_experiment(cfg);
    auto tab = by_scheme(rows);
    const auto& lng = tab.at("rs432x387_L1_single");
    const auto& single = tab.at("rs144x129_L3_BL6_single");
    const auto& two = tab.at("rs144x129_L3_BL6_two_pass");

    bool dominance = true;
    for (const auto& [sbr, r] : two)
        if (r.bler > single.at(sbr).bler + 1e-12) dominance = false;

    bool gap_found = false;
    std::string gap_at;
    for (const auto& [sbr, r] : two) {
        const auto& l = lng.at(sbr);
        const auto& s = single.at(sbr);
        bool factor2 = l.block_errors >= 2 * std::max(r.block_errors, 1L) ||
                       (l.block_errors >= 2 && r.block_errors == 0);
        double diff = std::abs(s.bler - l.bler);
        bool similar = diff <= ci95(s.block_errors, s.frames) + ci95(l.block_errors, l.frames);
        if (factor2 && similar && l.block_errors > 0) {
            gap_found = true;
            gap_at = std::to_string(sbr);
        }
    }

    std::printf("  case1 detail (sbr: long / ms-single / ms-two-pass BLER):\n");
    for (const auto& [sbr, r] : two)
        std::printf("    %5.1f dB: %.4f / %.4f / %.4f\n", sbr, lng.at(sbr).bler,
                    single.at(sbr).bler, r.bler);

    report(7, "Case 1 qualitative reproduction", dominance && gap_found,
           std::string("dominance ") + (dominance ? "holds" : "violated") +
               (gap_found ? ", >=2x gap with single~long at " + gap_at + " dB" : ", no qualifying SBR point"));
}

void criterion_8() {
    ExperimentConfig cfg = case2_preset();
    cfg.frames_per_point = 600;
    cfg.seed = 43;
    auto rows = run_experiment(cfg);
    auto tab = by_scheme(rows);
    const auto& bl7 = tab.at("rs147x132_L3_BL7_two_pass");
    const auto& bl6 = tab.at("rs144x129_L3_BL6_two_pass");

    int qualifying = 0, bl7_better_or_equal = 0;
    std::printf("  case2 report (sbr: BL=7 BLER [95%% CI] vs BL=6 BLER [95%% CI]):\n");
    for (const auto& [sbr, r7] : bl7) {
        const auto& r6 = bl6.at(sbr);
        std::printf("    %5.1f dB: %.4f [+-%.4f] vs %.4f [+-%.4f]%s\n", sbr, r7.bler,
                    ci95(r7.block_errors, r7.frames), r6.bler, ci95(r6.block_errors, r6.frames),
                    r6.block_errors >= 100 ? "  (qualifying)" : "");
        if (r6.block_errors >= 100) {
            ++qualifying;
            if (r7.bler <= r6.bler) ++bl7_better_or_equal;
        }
    }

    bool ok = qualifying > 0 && 2 * bl7_better_or_equal > qualifying;
    report(8, "Case 2 qualitative check (BL=7 vs BL=6 at duration 114)", ok,
           std::to_string(bl7_better_or_equal) + "/" + std::to_string(qualifying) +
               " qualifying points favor BL=7");
}

void criterion_9() {
    ExperimentConfig cfg = case1_preset();
    cfg.frames_per_point = 50;
    cfg.seed = 7;
    auto a = emit_results(run_experiment(cfg), cfg.seed, cfg.taps);
    auto b = emit_results(run_experiment(cfg), cfg.seed, cfg.taps);

    ExperimentConfig cfg2 = case2_preset();
    cfg2.frames_per_point = 30;
    cfg2.seed = 7;
    auto c = emit_results(run_experiment(cfg2), cfg2.seed, cfg2.taps);
    auto d = emit_results(run_experiment(cfg2), cfg2.seed, cfg2.taps);

    report(9, "determinism: byte-identical CSV for same preset and seed", a == b && c == d);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("%s: %d criterion(s) failed\n", g_failures ? "FAILURE" : "SUCCESS", g_failures);
    return g_failures;
}
