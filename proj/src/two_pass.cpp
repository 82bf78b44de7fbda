#include "msirs/two_pass.hpp"

#include <algorithm>
#include <stdexcept>

namespace msirs {

std::vector<DecodeResult> first_pass(const RsCode& code, const InterleaverConfig& cfg,
                                     const std::vector<unsigned>& frame) {
    auto codewords = deinterleave(cfg, frame);
    std::vector<DecodeResult> results;
    results.reserve(codewords.size());
    for (const auto& cw : codewords) results.push_back(code.decode(cw));
    return results;
}

std::optional<std::pair<int, int>> infer_burst_window(const std::vector<DecodeResult>& results,
                                                      const InterleaverConfig& cfg) {
    if (static_cast<int>(results.size()) != cfg.L)
        throw std::invalid_argument("infer_burst_window: expected L results");

    int s_lo = -1, s_hi = -1;
    for (int c = 0; c < cfg.L; ++c) {
        const auto& r = results[static_cast<size_t>(c)];
        if (!r.success) continue;
        for (int sym : r.error_positions) {
            int seg = cfg.position_map(c, sym) / cfg.BL;
            if (s_lo < 0 || seg < s_lo) s_lo = seg;
            if (seg > s_hi) s_hi = seg;
        }
    }
    if (s_lo < 0) return std::nullopt;

    auto failed_owner = [&](int seg) {
        return !results[static_cast<size_t>(cfg.owner_of_segment(seg))].success;
    };
    while (s_lo > 0 && failed_owner(s_lo - 1)) --s_lo;
    while (s_hi + 1 < cfg.total_segments() && failed_owner(s_hi + 1)) ++s_hi;
    return std::make_pair(s_lo, s_hi);
}

FrameOutcome decode_frame(const RsCode& code, const InterleaverConfig& cfg,
                          const std::vector<unsigned>& frame) {
    FrameOutcome out;
    out.first_pass = first_pass(code, cfg, frame);
    out.final = out.first_pass;
    out.pass_used.assign(static_cast<size_t>(cfg.L), 1);

    bool any_fail = std::any_of(out.first_pass.begin(), out.first_pass.end(),
                                [](const DecodeResult& r) { return !r.success; });
    if (!any_fail) {
        out.frame_success = true;
        return out;
    }

    bool any_success = std::any_of(out.first_pass.begin(), out.first_pass.end(),
                                   [](const DecodeResult& r) { return r.success; });
    if (any_success) out.inferred_window = infer_burst_window(out.first_pass, cfg);
    if (!out.inferred_window) {
        out.frame_success = false;
        return out;
    }

    auto [s_lo, s_hi] = *out.inferred_window;
    auto codewords = deinterleave(cfg, frame);
    const int max_segments = code.r() / cfg.BL;  // keep f = segments * BL <= r
    const double center = 0.5 * (s_lo + s_hi);

    for (int c = 0; c < cfg.L; ++c) {
        if (out.first_pass[static_cast<size_t>(c)].success) continue;

        std::vector<int> segs;  // this codeword's segments inside the window
        for (int s = s_lo; s <= s_hi; ++s)
            if (cfg.owner_of_segment(s) == c) segs.push_back(s);
        // Trim outermost segments (ties drop the higher index) until the
        // implied erasure count fits the decoder's radius.
        while (static_cast<int>(segs.size()) > max_segments) {
            double d_lo = center - segs.front();
            double d_hi = segs.back() - center;
            if (d_lo > d_hi)
                segs.erase(segs.begin());
            else
                segs.pop_back();
        }
        if (segs.empty()) continue;  // nothing to erase, keep pass-1 failure

        std::vector<int> erasures;
        for (int s : segs) {
            int first_sym = (s / cfg.L) * cfg.BL;
            for (int i = 0; i < cfg.BL; ++i) erasures.push_back(first_sym + i);
        }
        out.final[static_cast<size_t>(c)] =
            code.decode(codewords[static_cast<size_t>(c)], erasures);
        out.pass_used[static_cast<size_t>(c)] = 2;
    }

    out.frame_success = std::all_of(out.final.begin(), out.final.end(),
                                    [](const DecodeResult& r) { return r.success; });
    return out;
}

} // namespace msirs
