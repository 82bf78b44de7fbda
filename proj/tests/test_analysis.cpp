#include <doctest.h>

#include <initializer_list>
#include <stdexcept>

#include "msirs/analysis.hpp"

using msirs::becc_bits;
using msirs::latency;
using msirs::Scheme;

TEST_CASE("BECC fixtures") {
    CHECK(becc_bits(Scheme::ss_irs, 3, 4, 1, 9) == 100);
    CHECK(becc_bits(Scheme::ms_irs, 3, 4, 4, 9) == 145);
    CHECK(becc_bits(Scheme::ss_irs, 1, 1, 1, 1) == 1);
}

TEST_CASE("ms_irs with BL = t reduces to the (L-1)*2t*m + 1 form") {
    for (int L : {1, 2, 3, 5, 10})
        for (int t : {1, 4, 7, 22})
            for (int m : {3, 4, 9, 12})
                CHECK(becc_bits(Scheme::ms_irs, L, t, t, m) ==
                      static_cast<long>(L - 1) * 2 * t * m + 1);
}

TEST_CASE("near-doubling for large L at BL = t") {
    for (int L : {10, 20, 50})
        for (int t : {4, 7, 10}) {
            double ratio = static_cast<double>(becc_bits(Scheme::ms_irs, L, t, t, 9)) /
                           static_cast<double>(becc_bits(Scheme::ss_irs, L, t, t, 9));
            CHECK(ratio > 1.8);
        }
}

TEST_CASE("BL outside the formula regime is rejected") {
    CHECK_THROWS_AS(becc_bits(Scheme::ms_irs, 3, 4, 5, 9), std::invalid_argument);
    CHECK_THROWS_AS(becc_bits(Scheme::ss_irs, 0, 4, 1, 9), std::invalid_argument);
}

TEST_CASE("latency fixture: RS(108,96), 4x interleave, 1 Gb/s") {
    auto lb = latency(108, 96, 9, 4, 1e9, 120);
    CHECK(lb.buffering_ns == 384.0);
    CHECK(lb.receiving_ns == 3456.0);
    CHECK(lb.decoding_budget_ns == 120.0);
    CHECK(lb.total_ns == 384.0 + 3456.0 + 120.0);
    CHECK(lb.total_ns < 4000.0);
}

TEST_CASE("latency scales linearly in L and inversely in rate") {
    auto l1 = latency(108, 96, 9, 1, 1e9, 0);
    CHECK(l1.buffering_ns == 96.0);
    auto fast = latency(108, 96, 9, 4, 2e9, 120);
    auto slow = latency(108, 96, 9, 4, 1e9, 120);
    CHECK(fast.buffering_ns == doctest::Approx(slow.buffering_ns / 2));
    CHECK(fast.receiving_ns == doctest::Approx(slow.receiving_ns / 2));
}

TEST_CASE("latency rejects invalid input") {
    CHECK_THROWS_AS(latency(96, 108, 9, 4, 1e9, 120), std::invalid_argument);
    CHECK_THROWS_AS(latency(108, 96, 9, 4, 0, 120), std::invalid_argument);
    CHECK_THROWS_AS(latency(108, 96, 9, 4, 1e9, -1), std::invalid_argument);
}
