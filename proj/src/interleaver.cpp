#include "msirs/interleaver.hpp"

#include <stdexcept>
#include <string>

namespace msirs {

InterleaverConfig::InterleaverConfig(int depth, int burst_len, int codeword_len)
    : L(depth), BL(burst_len), n(codeword_len) {
    if (L < 1 || BL < 1 || n < 1)
        throw std::invalid_argument("InterleaverConfig: L, BL, n must be >= 1");
    if (n % BL != 0)
        throw std::invalid_argument("InterleaverConfig: n must be divisible by BL (n=" +
                                    std::to_string(n) + ", BL=" + std::to_string(BL) + ")");
}

int InterleaverConfig::position_map(int codeword_index, int symbol_index) const {
    if (codeword_index < 0 || codeword_index >= L || symbol_index < 0 || symbol_index >= n)
        throw std::out_of_range("InterleaverConfig::position_map: index out of range");
    int round = symbol_index / BL;           // which dispatch of this codeword
    int within = symbol_index % BL;
    int segment = round * L + codeword_index;
    return segment * BL + within;
}

std::pair<int, int> InterleaverConfig::position_unmap(int stream_position) const {
    if (stream_position < 0 || stream_position >= frame_symbols())
        throw std::out_of_range("InterleaverConfig::position_unmap: position out of range");
    int segment = stream_position / BL;
    int within = stream_position % BL;
    int codeword = segment % L;
    int symbol = (segment / L) * BL + within;
    return {codeword, symbol};
}

std::vector<unsigned> interleave(const InterleaverConfig& cfg,
                                 const std::vector<std::vector<unsigned>>& codewords) {
    if (static_cast<int>(codewords.size()) != cfg.L)
        throw std::invalid_argument("interleave: expected L codewords");
    for (const auto& cw : codewords)
        if (static_cast<int>(cw.size()) != cfg.n)
            throw std::invalid_argument("interleave: each codeword must have n symbols");

    std::vector<unsigned> stream(static_cast<size_t>(cfg.frame_symbols()));
    for (int c = 0; c < cfg.L; ++c)
        for (int i = 0; i < cfg.n; ++i)
            stream[static_cast<size_t>(cfg.position_map(c, i))] =
                codewords[static_cast<size_t>(c)][static_cast<size_t>(i)];
    return stream;
}

std::vector<std::vector<unsigned>> deinterleave(const InterleaverConfig& cfg,
                                                const std::vector<unsigned>& stream) {
    if (static_cast<int>(stream.size()) != cfg.frame_symbols())
        throw std::invalid_argument("deinterleave: stream must have L*n symbols");

    std::vector<std::vector<unsigned>> codewords(
        static_cast<size_t>(cfg.L), std::vector<unsigned>(static_cast<size_t>(cfg.n)));
    for (int p = 0; p < cfg.frame_symbols(); ++p) {
        auto [c, i] = cfg.position_unmap(p);
        codewords[static_cast<size_t>(c)][static_cast<size_t>(i)] = stream[static_cast<size_t>(p)];
    }
    return codewords;
}

} // namespace msirs
