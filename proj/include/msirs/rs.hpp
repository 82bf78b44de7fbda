#ifndef MSIRS_RS_HPP
#define MSIRS_RS_HPP

#include <cstdint>
#include <vector>

#include "msirs/gf.hpp"

namespace msirs {

struct DecodeResult {
    bool success = false;
    std::vector<unsigned> codeword;    // corrected word, empty on failure
    std::vector<int> error_positions;  // positions whose value was changed
};

// Coefficients constant-first: poly[i] is the coefficient of x^i.
std::vector<unsigned> generator_poly(const Field& field, int r, int first_root);

/// Systematic shortened RS(n, k) over GF(2^m): message symbols first,
/// parity last. Shortening prepends virtual zero symbols, so any n up to
/// 2^m - 1 is valid. The decoder corrects e errors and f erasures whenever
/// 2e + f <= r = n - k (full redundancy, also when r is odd).
class RsCode {
public:
    RsCode(Field field, int n, int k, int first_root = 0);

    int n() const { return n_; }
    int k() const { return k_; }
    int r() const { return r_; }
    int t() const { return r_ / 2; }
    int first_root() const { return b_; }
    const Field& field() const { return field_; }
    const std::vector<unsigned>& generator() const { return gen_; }

    std::vector<unsigned> encode(const std::vector<unsigned>& message) const;

    // Errors-and-erasures decoding: syndromes, erasure-initialized
    // Berlekamp-Massey, Chien search over the shortened support, Forney
    // magnitudes, then a full syndrome re-check of the corrected word.
    DecodeResult decode(const std::vector<unsigned>& received,
                        const std::vector<int>& erasures = {}) const;

    std::vector<unsigned> syndromes(const std::vector<unsigned>& word) const;

private:
    Field field_;
    int n_, k_, r_, b_;
    std::vector<unsigned> gen_;
};

} // namespace msirs

#endif
