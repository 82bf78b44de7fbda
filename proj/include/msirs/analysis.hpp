#ifndef MSIRS_ANALYSIS_HPP
#define MSIRS_ANALYSIS_HPP

#include <cstdint>

namespace msirs {

enum class Scheme { ss_irs, ms_irs };

/// Worst-case burst error correction capability in bits.
/// ss_irs: (L*t - 1)*m + 1. ms_irs (two-pass, BL <= t): (L-1)*2*BL*m + 1.
long becc_bits(Scheme scheme, int L, int t, int BL, int m);

struct LatencyBreakdown {
    double buffering_ns = 0;
    double receiving_ns = 0;
    double decoding_budget_ns = 0;
    double total_ns = 0;
};

/// FEC latency accounting at a given line rate. Buffering covers the parity
/// overhead of L codewords, receiving covers their message payload.
LatencyBreakdown latency(int n, int k, int m, int L, double data_rate_bps,
                         double decoding_budget_ns);

} // namespace msirs

#endif
