#include "msirs/gf.hpp"

#include <stdexcept>
#include <string>

namespace msirs {

Field::Field(int m, unsigned primitive_poly) : m_(m), poly_(primitive_poly) {
    if (m < 3 || m > 12)
        throw std::invalid_argument("Field: m must be in [3, 12], got " + std::to_string(m));
    // degree check: bit m set, no bits above it
    if ((primitive_poly >> m) != 1u)
        throw std::invalid_argument("Field: polynomial must have degree exactly m");

    const unsigned q = (1u << m) - 1;
    exp_.assign(q, 0);
    log_.assign(1u << m, 0);

    std::vector<bool> seen(1u << m, false);
    unsigned v = 1;
    for (unsigned i = 0; i < q; ++i) {
        if (v == 0 || seen[v])
            throw std::invalid_argument("Field: polynomial is not primitive");
        seen[v] = true;
        exp_[i] = static_cast<uint16_t>(v);
        log_[v] = static_cast<uint16_t>(i);
        v <<= 1;                         // multiply by alpha = x
        if (v & (1u << m)) v ^= primitive_poly;
    }
}

unsigned Field::log(unsigned a) const {
    if (a == 0 || a >= size())
        throw std::invalid_argument("Field::log: argument must be a nonzero element");
    return log_[a];
}

unsigned Field::inv(unsigned a) const {
    if (a == 0)
        throw std::invalid_argument("Field::inv: zero has no inverse");
    return exp_[(order() - log_[a]) % order()];
}

unsigned Field::pow(unsigned a, long e) const {
    if (a == 0) {
        if (e < 0) throw std::invalid_argument("Field::pow: negative power of zero");
        return e == 0 ? 1u : 0u;
    }
    long q = order();
    long x = (static_cast<long>(log_[a]) * (e % q)) % q;
    if (x < 0) x += q;
    return exp_[static_cast<size_t>(x)];
}

unsigned Field::default_poly(int m) {
    switch (m) {
        case 3:  return 0xB;     // x^3 + x + 1
        case 4:  return 0x13;    // x^4 + x + 1
        case 5:  return 0x25;    // x^5 + x^2 + 1
        case 6:  return 0x43;    // x^6 + x + 1
        case 7:  return 0x89;    // x^7 + x^3 + 1
        case 8:  return 0x11D;   // x^8 + x^4 + x^3 + x^2 + 1
        case 9:  return 0x211;   // x^9 + x^4 + 1
        case 10: return 0x409;   // x^10 + x^3 + 1
        case 11: return 0x805;   // x^11 + x^2 + 1
        case 12: return 0x1053;  // x^12 + x^6 + x^4 + x + 1
        default:
            throw std::invalid_argument("Field::default_poly: m out of range");
    }
}

} // namespace msirs
