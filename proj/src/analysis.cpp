#include "msirs/analysis.hpp"

#include <stdexcept>

namespace msirs {

long becc_bits(Scheme scheme, int L, int t, int BL, int m) {
    if (L < 1 || t < 1 || m < 1)
        throw std::invalid_argument("becc_bits: require L >= 1, t >= 1, m >= 1");
    switch (scheme) {
        case Scheme::ss_irs:
            return (static_cast<long>(L) * t - 1) * m + 1;
        case Scheme::ms_irs:
            if (BL < 1 || BL > t)
                throw std::invalid_argument("becc_bits: ms_irs formula requires 1 <= BL <= t");
            return static_cast<long>(L - 1) * 2 * BL * m + 1;
    }
    throw std::invalid_argument("becc_bits: unknown scheme");
}

LatencyBreakdown latency(int n, int k, int m, int L, double data_rate_bps,
                         double decoding_budget_ns) {
    if (n <= 0 || k <= 0 || k >= n || m <= 0 || L <= 0)
        throw std::invalid_argument("latency: invalid code parameters");
    if (data_rate_bps <= 0)
        throw std::invalid_argument("latency: data rate must be positive");
    if (decoding_budget_ns < 0)
        throw std::invalid_argument("latency: decoding budget must be non-negative");

    const double bit_ns = 1e9 / data_rate_bps;
    LatencyBreakdown lb;
    // Integer numerators keep the result exact when the division by n is
    // exact (e.g. 4*12*96*9/108 at 1 Gb/s).
    lb.buffering_ns =
        static_cast<double>(static_cast<long>(L) * (n - k) * k * m) / n * bit_ns;
    lb.receiving_ns = static_cast<double>(static_cast<long>(L) * k * m) * bit_ns;
    lb.decoding_budget_ns = decoding_budget_ns;
    lb.total_ns = lb.buffering_ns + lb.receiving_ns + lb.decoding_budget_ns;
    return lb;
}

} // namespace msirs
