#ifndef MSIRS_INTERLEAVER_HPP
#define MSIRS_INTERLEAVER_HPP

#include <vector>

#include "msirs/rs.hpp"

namespace msirs {

/// Round-robin dispatch of L component codewords, BL symbols at a time.
/// A "segment" is one BL-symbol dispatch; segment s of the stream belongs
/// to codeword s mod L.
struct InterleaverConfig {
    int L = 1;   // interleave depth
    int BL = 1;  // symbols per dispatch
    int n = 1;   // component codeword length

    InterleaverConfig(int depth, int burst_len, int codeword_len);

    int segments_per_codeword() const { return n / BL; }
    int total_segments() const { return L * (n / BL); }
    int frame_symbols() const { return L * n; }

    int owner_of_segment(int s) const { return s % L; }

    // (codeword, symbol) -> frame-relative stream position.
    int position_map(int codeword_index, int symbol_index) const;
    // stream position -> (codeword, symbol)
    std::pair<int, int> position_unmap(int stream_position) const;
};

std::vector<unsigned> interleave(const InterleaverConfig& cfg,
                                 const std::vector<std::vector<unsigned>>& codewords);

std::vector<std::vector<unsigned>> deinterleave(const InterleaverConfig& cfg,
                                                const std::vector<unsigned>& stream);

} // namespace msirs

#endif
