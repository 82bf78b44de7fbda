#ifndef MSIRS_TWO_PASS_HPP
#define MSIRS_TWO_PASS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "msirs/interleaver.hpp"
#include "msirs/rs.hpp"

namespace msirs {

struct FrameOutcome {
    std::vector<DecodeResult> first_pass;  // per codeword, errors-only
    std::vector<DecodeResult> final;       // pass-2 result where attempted
    std::vector<int> pass_used;            // 1 or 2 per codeword
    std::optional<std::pair<int, int>> inferred_window;  // [s_lo, s_hi] segments
    bool frame_success = false;            // all L codewords succeeded
};

/// Errors-only decode of all L codewords of one interleaved frame.
std::vector<DecodeResult> first_pass(const RsCode& code, const InterleaverConfig& cfg,
                                     const std::vector<unsigned>& frame);

/// Burst window inference from first-pass corrections: seed with the segment
/// indices of every corrected position of every successful codeword, then
/// grow the range over adjacent segments owned by failed codewords. Returns
/// nullopt when no successful codeword had any correction.
std::optional<std::pair<int, int>> infer_burst_window(const std::vector<DecodeResult>& results,
                                                      const InterleaverConfig& cfg);

/// First pass, window inference, then combined error-and-erasure re-decoding
/// of the first-pass failures with their in-window segments erased. Codewords
/// that succeeded in pass 1 are never touched again.
FrameOutcome decode_frame(const RsCode& code, const InterleaverConfig& cfg,
                          const std::vector<unsigned>& frame);

} // namespace msirs

#endif
