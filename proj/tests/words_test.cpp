// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>

#include "spectra/words.hpp"

using namespace spectra;

namespace {

std::string brute_least_rotation(const std::string& u) {
    std::string best = u;
    for (std::size_t i = 1; i < u.size(); ++i) best = std::min(best, u.substr(i) + u.substr(0, i));
    return best;
}

bool brute_primitive(const std::string& u) {
    for (std::size_t d = 1; d < u.size(); ++d) {
        if (u.size() % d) continue;
        std::string r;
        while (r.size() < u.size()) r += u.substr(0, d);
        if (r == u) return false;
    }
    return true;
}

} // namespace

TEST(Words, PrimitiveAndRoot) {
    EXPECT_TRUE(is_primitive("01"));
    EXPECT_FALSE(is_primitive("0101"));
    EXPECT_EQ(primitive_root("010101"), "01");
    EXPECT_EQ(primitive_root("aab"), "aab");
}

TEST(Words, CanonicalPeriod) {
    EXPECT_EQ(canonical_period("10"), "01");
    EXPECT_EQ(canonical_period("1010"), "01");
    EXPECT_EQ(canonical_period("bca"), "abc");
    EXPECT_EQ(repeat("01", 3), "010101");
}

TEST(Words, ExhaustiveAgainstBruteForce) {
    for (std::size_t len = 1; len <= 10; ++len)
        for (std::size_t code = 0; code < (std::size_t{1} << (2 * len)) && code < 60000; ++code) {
            std::string u;
            for (std::size_t c = code, i = 0; i < len; ++i, c /= 3) u.push_back(static_cast<char>('a' + c % 3));
            ASSERT_EQ(least_rotation(u), brute_least_rotation(u)) << u;
            ASSERT_EQ(is_primitive(u), brute_primitive(u)) << u;
            ASSERT_EQ(u.substr(least_rotation_start(u)) + u.substr(0, least_rotation_start(u)), least_rotation(u));
        }
}
