// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>
#include <set>

#include "spectra/horizon.hpp"

using namespace spectra;

namespace {

WordSpec fibonacci() { return {MorphicSpec{{{'0', "01"}, {'1', "0"}}, {}, '0'}}; }
WordSpec thue_morse() { return {MorphicSpec{{{'0', "01"}, {'1', "10"}}, {}, '0'}}; }
WordSpec periodic(std::string u) { return {PeriodicSpec{std::move(u)}}; }

std::set<std::string> all_factors(const std::string& w) {
    std::set<std::string> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j <= w.size(); ++j) out.insert(w.substr(i, j - i));
    return out;
}

} // namespace

TEST(FactorIndex, SmallExamples) {
    FactorIndex aa("aa"), ab("ab");
    EXPECT_EQ(aa.distinct_factor_count(), 2u);
    EXPECT_EQ(ab.distinct_factor_count(), 3u);
    EXPECT_THROW(FactorIndex(""), RangeError);
}

TEST(FactorIndex, Membership) {
    FactorIndex idx("010101");
    EXPECT_TRUE(idx.is_factor("101"));
    EXPECT_FALSE(idx.is_factor("00"));
    EXPECT_FALSE(idx.is_factor("2"));
    FactorIndex fib(generate_prefix(fibonacci(), 1000));
    EXPECT_FALSE(fib.is_factor("000"));
    EXPECT_FALSE(fib.is_factor("11"));
}

TEST(FactorIndex, RandomStringsAgainstBruteForce) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t len = 1 + rng() % 40;
        std::size_t sigma = 1 + rng() % 3;
        std::string w;
        for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<char>('a' + rng() % sigma));
        FactorIndex idx(w);
        auto facs = all_factors(w);
        ASSERT_EQ(idx.distinct_factor_count(), facs.size()) << w;
        ASSERT_TRUE(idx.check_consistency());
        for (std::size_t n = 1; n <= len; ++n) ASSERT_EQ(idx.complexity(n), naive::complexity(w, n)) << w << " " << n;
        for (std::size_t n = 1; n <= std::min<std::size_t>(len, 6); ++n)
            ASSERT_EQ(idx.factors_of_length(n), naive::distinct_windows(w, n)) << w;
        // non-factors of length <= 4
        for (std::size_t n = 1; n <= 4; ++n)
            for (std::size_t code = 0; code < std::pow(sigma + 1, n); ++code) {
                std::string u;
                for (std::size_t c = code, i = 0; i < n; ++i, c /= sigma + 1) u.push_back(static_cast<char>('a' + c % (sigma + 1)));
                ASSERT_EQ(idx.is_factor(u), facs.count(u) > 0) << w << " " << u;
            }
    }
}

TEST(FactorIndex, FibonacciTotalMatchesNaive) {
    auto w = generate_prefix(fibonacci(), 1000);
    FactorIndex idx(w);
    std::uint64_t naive_total = 0;
    for (std::size_t n = 1; n <= w.size(); ++n) naive_total += naive::complexity(w, n);
    EXPECT_EQ(idx.distinct_factor_count(), naive_total);
}

TEST(Complexity, KnownValues) {
    EXPECT_EQ(index_for(periodic("01"), 3)->complexity(3), 2u);
    EXPECT_EQ(index_for(fibonacci(), 5)->complexity(5), 6u);
    EXPECT_EQ(index_for(thue_morse(), 4)->complexity(4), 10u);
    FactorIndex small("0101");
    EXPECT_THROW(small.complexity(0), RangeError);
    EXPECT_THROW(small.complexity(5), RangeError);
}

TEST(Complexity, ProfileAndHorizon) {
    auto p = index_for(periodic("01"), 5)->complexity_profile(5);
    EXPECT_EQ(p.counts, (std::vector<std::uint64_t>{2, 2, 2, 2, 2}));
    EXPECT_EQ(p.differences, (std::vector<std::int64_t>{0, 0, 0, 0}));
    auto f = index_for(fibonacci(), 10)->complexity_profile(10);
    for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(f.counts[i], i + 2);
    for (auto d : f.differences) EXPECT_EQ(d, 1);
    auto r = index_for({BlocksSpec{BlockBuilder::RadicalExample, {}}}, 10)->complexity_profile(10);
    for (auto d : r.differences) {
        EXPECT_GE(d, 0);
        EXPECT_LE(d, 3);
    }
    EXPECT_THROW(index_for(fibonacci(), 10)->complexity_profile(11), RangeError);
}

TEST(Enumeration, SortedDistinctAndGuarded) {
    EXPECT_EQ(index_for(periodic("01"), 2)->factors_of_length(2), (std::vector<std::string>{"01", "10"}));
    EXPECT_EQ(index_for(fibonacci(), 3)->factors_of_length(3), (std::vector<std::string>{"001", "010", "100", "101"}));
    EXPECT_THROW(index_for(fibonacci(), 3)->factors_of_length(4), RangeError);
    auto capped = index_for(thue_morse(), 10, 5);
    EXPECT_THROW(capped->factors_of_length(4), CapExceeded);
}

TEST(CountContaining, Examples) {
    auto fib = index_for(fibonacci(), 5);
    EXPECT_EQ(fib->count_containing(5, "00"), 5u);
    EXPECT_EQ(fib->count_containing(5, "11"), 0u);
    EXPECT_EQ(fib->count_containing(5, "01001"), 1u);
    EXPECT_EQ(fib->count_containing(5, "01011"), 0u);
    EXPECT_THROW(fib->count_containing(2, "010"), RangeError);
}

TEST(RightSpecial, Examples) {
    EXPECT_TRUE(index_for(periodic("01"), 3)->right_special(2).empty());
    EXPECT_EQ(index_for(fibonacci(), 2)->right_special(1), (std::vector<std::string>{"0"}));
    EXPECT_EQ(index_for(thue_morse(), 3)->right_special(2).size(), 2u);
    EXPECT_THROW(index_for(fibonacci(), 2)->right_special(2), RangeError);
}

TEST(RightSpecial, DifferenceIdentity) {
    for (const auto& spec : {fibonacci(), thue_morse(), WordSpec{BlocksSpec{BlockBuilder::RunDoubling, {}}}}) {
        auto idx = index_for(spec, 30);
        for (std::size_t n = 1; n < 30; ++n) {
            std::int64_t sum = 0;
            for (const auto& u : idx->right_special(n)) sum += static_cast<std::int64_t>(idx->right_extension_count(u)) - 1;
            EXPECT_EQ(static_cast<std::int64_t>(idx->complexity(n + 1)) - static_cast<std::int64_t>(idx->complexity(n)), sum)
                << describe(spec) << " n=" << n;
        }
    }
}

TEST(Horizon, IndexCarriesHorizon) {
    auto idx = index_for(fibonacci(), 50);
    EXPECT_EQ(idx->horizon().n_max, 50u);
    EXPECT_EQ(idx->horizon().guarantee, Guarantee::Stabilized);
    EXPECT_EQ(idx->size(), idx->horizon().prefix_len);
}
