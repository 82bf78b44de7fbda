#ifndef MSIRS_GF_HPP
#define MSIRS_GF_HPP

#include <cstdint>
#include <vector>

namespace msirs {

/// Arithmetic context for GF(2^m), 3 <= m <= 12, backed by exp/log tables.
/// Immutable after construction; safe to share across threads.
class Field {
public:
    // Throws std::invalid_argument if m is out of range or the polynomial
    // is not primitive of degree m (detected by a repeated table entry).
    Field(int m, unsigned primitive_poly);

    int m() const { return m_; }
    unsigned primitive_poly() const { return poly_; }
    unsigned size() const { return 1u << m_; }          // 2^m
    unsigned order() const { return (1u << m_) - 1; }   // multiplicative order

    // alpha^i for any integer i (reduced mod 2^m - 1).
    unsigned exp(long i) const {
        long q = order();
        long e = i % q;
        if (e < 0) e += q;
        return exp_[static_cast<size_t>(e)];
    }
    // discrete log of a nonzero element; throws on zero.
    unsigned log(unsigned a) const;

    unsigned mul(unsigned a, unsigned b) const {
        if (a == 0 || b == 0) return 0;
        unsigned s = log_[a] + log_[b];
        if (s >= order()) s -= order();
        return exp_[s];
    }
    unsigned div(unsigned a, unsigned b) const { return mul(a, inv(b)); }
    unsigned inv(unsigned a) const;                     // throws on zero
    unsigned pow(unsigned a, long e) const;

    // Conventional minimum-weight primitive polynomial for each m.
    static unsigned default_poly(int m);

private:
    int m_ = 0;
    unsigned poly_ = 0;
    std::vector<uint16_t> exp_;
    std::vector<uint16_t> log_;
};

// Addition in characteristic 2 is xor of the element encodings.
inline unsigned gf_add(unsigned a, unsigned b) { return a ^ b; }

} // namespace msirs

#endif
