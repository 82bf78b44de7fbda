#include "msirs/rs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace msirs {

namespace {

int poly_deg(const std::vector<unsigned>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return 0;
}

unsigned poly_eval(const Field& f, const std::vector<unsigned>& p, unsigned x) {
    unsigned acc = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        acc = f.mul(acc, x) ^ p[static_cast<unsigned>(i)];
    return acc;
}

} // namespace

std::vector<unsigned> generator_poly(const Field& field, int r, int first_root) {
    if (r < 1 || static_cast<unsigned>(r) >= field.order())
        throw std::invalid_argument("generator_poly: r must satisfy 1 <= r < 2^m - 1");
    std::vector<unsigned> g{1};
    for (int i = 0; i < r; ++i) {
        unsigned root = field.exp(first_root + i);
        std::vector<unsigned> next(g.size() + 1, 0);
        for (size_t j = 0; j < g.size(); ++j) {
            next[j + 1] ^= g[j];                 // x * g
            next[j] ^= field.mul(g[j], root);    // root * g
        }
        g = std::move(next);
    }
    return g;
}

RsCode::RsCode(Field field, int n, int k, int first_root)
    : field_(std::move(field)), n_(n), k_(k), r_(n - k), b_(first_root) {
    if (!(0 < k && k < n && static_cast<unsigned>(n) <= field_.order()))
        throw std::invalid_argument("RsCode: require 0 < k < n <= 2^m - 1");
    gen_ = generator_poly(field_, r_, b_);
}

std::vector<unsigned> RsCode::encode(const std::vector<unsigned>& message) const {
    if (static_cast<int>(message.size()) != k_)
        throw std::invalid_argument("RsCode::encode: message must have k symbols");
    for (unsigned s : message)
        if (s >= field_.size())
            throw std::invalid_argument("RsCode::encode: symbol out of field range");

    // parity = remainder of message * x^r mod generator (LFSR division)
    std::vector<unsigned> par(r_, 0);
    for (int i = 0; i < k_; ++i) {
        unsigned fb = message[static_cast<size_t>(i)] ^ par[static_cast<size_t>(r_ - 1)];
        for (int j = r_ - 1; j >= 1; --j)
            par[static_cast<size_t>(j)] =
                par[static_cast<size_t>(j - 1)] ^ field_.mul(fb, gen_[static_cast<size_t>(j)]);
        par[0] = field_.mul(fb, gen_[0]);
    }

    std::vector<unsigned> out(message);
    out.reserve(static_cast<size_t>(n_));
    for (int j = r_ - 1; j >= 0; --j) out.push_back(par[static_cast<size_t>(j)]);
    return out;
}

std::vector<unsigned> RsCode::syndromes(const std::vector<unsigned>& word) const {
    // S_j = word(alpha^(b+j)), word read as a degree n-1 polynomial with the
    // first symbol as the leading coefficient.
    std::vector<unsigned> s(static_cast<size_t>(r_), 0);
    for (int j = 0; j < r_; ++j) {
        unsigned z = field_.exp(b_ + j);
        unsigned acc = 0;
        for (int i = 0; i < n_; ++i)
            acc = field_.mul(acc, z) ^ word[static_cast<size_t>(i)];
        s[static_cast<size_t>(j)] = acc;
    }
    return s;
}

DecodeResult RsCode::decode(const std::vector<unsigned>& received,
                            const std::vector<int>& erasures) const {
    if (static_cast<int>(received.size()) != n_)
        throw std::invalid_argument("RsCode::decode: received must have n symbols");
    if (static_cast<int>(erasures.size()) > r_)
        throw std::invalid_argument("RsCode::decode: more erasures than redundancy");
    {
        std::vector<int> e(erasures);
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("RsCode::decode: duplicate erasure position");
        if (!e.empty() && (e.front() < 0 || e.back() >= n_))
            throw std::invalid_argument("RsCode::decode: erasure position out of range");
    }

    const int f = static_cast<int>(erasures.size());
    DecodeResult res;

    std::vector<unsigned> synd = syndromes(received);
    bool clean = std::all_of(synd.begin(), synd.end(), [](unsigned v) { return v == 0; });
    if (clean) {
        res.success = true;
        res.codeword = received;
        return res;
    }

    // Erasure locator Gamma(x) = prod (1 + X_i x), X_i = alpha^(n-1-pos).
    std::vector<unsigned> lambda(static_cast<size_t>(r_) + 1, 0);
    lambda[0] = 1;
    for (int pos : erasures) {
        unsigned x = field_.exp(n_ - 1 - pos);
        for (int j = f; j >= 1; --j)
            lambda[static_cast<size_t>(j)] ^= field_.mul(lambda[static_cast<size_t>(j - 1)], x);
    }

    // Berlekamp-Massey seeded with the erasure locator.
    std::vector<unsigned> b_poly(lambda);
    std::vector<unsigned> t_poly(lambda.size(), 0);
    int el = f;
    for (int step = f + 1; step <= r_; ++step) {
        unsigned d = 0;
        for (int i = 0; i < step; ++i)
            if (i <= r_ && lambda[static_cast<size_t>(i)] != 0)
                d ^= field_.mul(lambda[static_cast<size_t>(i)],
                                synd[static_cast<size_t>(step - 1 - i)]);
        if (d == 0) {
            // B <- x * B
            for (int j = r_; j >= 1; --j) b_poly[static_cast<size_t>(j)] = b_poly[static_cast<size_t>(j - 1)];
            b_poly[0] = 0;
        } else {
            // T = Lambda + d * x * B
            t_poly[0] = lambda[0];
            for (int j = 0; j < r_; ++j)
                t_poly[static_cast<size_t>(j + 1)] =
                    lambda[static_cast<size_t>(j + 1)] ^ field_.mul(d, b_poly[static_cast<size_t>(j)]);
            if (2 * el <= step + f - 1) {
                el = step + f - el;
                unsigned dinv = field_.inv(d);
                for (size_t j = 0; j < lambda.size(); ++j)
                    b_poly[j] = field_.mul(lambda[j], dinv);
            } else {
                for (int j = r_; j >= 1; --j) b_poly[static_cast<size_t>(j)] = b_poly[static_cast<size_t>(j - 1)];
                b_poly[0] = 0;
            }
            lambda = t_poly;
        }
    }

    const int nu = poly_deg(lambda);
    // nu = f + e; within the radius 2e + f <= r.
    if (nu > r_ || 2 * nu - f > r_) return res;

    // Chien search restricted to the shortened support.
    std::vector<int> locs;
    for (int i = 0; i < n_; ++i) {
        unsigned xinv = field_.exp(-(static_cast<long>(n_) - 1 - i));
        if (poly_eval(field_, lambda, xinv) == 0) locs.push_back(i);
    }
    if (static_cast<int>(locs.size()) != nu) return res;

    // Omega = S * Lambda mod x^r.
    std::vector<unsigned> omega(static_cast<size_t>(r_), 0);
    for (int i = 0; i < r_; ++i) {
        unsigned acc = 0;
        for (int j = 0; j <= i && j <= nu; ++j)
            acc ^= field_.mul(lambda[static_cast<size_t>(j)], synd[static_cast<size_t>(i - j)]);
        omega[static_cast<size_t>(i)] = acc;
    }

    // Forney: e_i = X^(1-b) * Omega(X^-1) / Lambda'(X^-1).
    std::vector<unsigned> corrected(received);
    for (int pos : locs) {
        long deg = static_cast<long>(n_) - 1 - pos;
        unsigned xinv = field_.exp(-deg);
        unsigned num = poly_eval(field_, omega, xinv);
        unsigned den = 0;
        for (int j = 1; j <= nu; j += 2)
            den ^= field_.mul(lambda[static_cast<size_t>(j)], field_.pow(xinv, j - 1));
        if (den == 0) return res;
        unsigned mag = field_.mul(field_.div(num, den), field_.exp(deg * (1 - b_)));
        corrected[static_cast<size_t>(pos)] ^= mag;
    }

    // Mandatory re-check before trusting the correction.
    std::vector<unsigned> synd2 = syndromes(corrected);
    if (!std::all_of(synd2.begin(), synd2.end(), [](unsigned v) { return v == 0; }))
        return res;

    res.success = true;
    res.codeword = std::move(corrected);
    for (int i = 0; i < n_; ++i)
        if (res.codeword[static_cast<size_t>(i)] != received[static_cast<size_t>(i)])
            res.error_positions.push_back(i);
    return res;
}

} // namespace msirs
