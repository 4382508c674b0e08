// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "spectra/factor_index.hpp"
#include "spectra/wordgen.hpp"

using namespace spectra;

namespace {

// Slope value from the directive terms, in long double: [0; 1 + d1, d2, ...].
long double slope_of(const std::vector<std::uint64_t>& d) {
    long double x = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
        long double b = static_cast<long double>(d[i] + (i == 0 ? 1 : 0));
        x = 1.0L / (b + x);
    }
    return x;
}

} // namespace

TEST(Sturmian, GoldenCharacteristicIsFibonacci) {
    WordSpec s{SturmianSpec{std::vector<std::uint64_t>(40, 1), std::nullopt}};
    EXPECT_EQ(generate_prefix(s, 8), "01001010");
    WordSpec fib{MorphicSpec{{{'0', "01"}, {'1', "0"}}, {}, '0'}};
    EXPECT_EQ(generate_prefix(s, 5000), generate_prefix(fib, 5000));
}

TEST(Sturmian, PositionZeroWithZeroIntercept) {
    for (std::vector<std::uint64_t> cf : {std::vector<std::uint64_t>{1, 1, 1, 1}, {3, 2, 5, 1}, {1, 7, 1, 2}})
        EXPECT_EQ(sturmian_letter(cf, Rational{0, 1}, 0), 0);
}

TEST(Sturmian, MatchesFloatingMechanicalWordAwayFromBoundaries) {
    std::vector<std::uint64_t> cf{2, 1, 3, 1, 1, 2, 1, 4, 1, 1, 2, 1, 1, 1, 3, 1, 1, 1, 1, 1, 1};
    const long double a = slope_of(cf);
    SturmianSlope slope(cf, Rational{2, 7});
    const long double rho = 2.0L / 7.0L;
    for (std::uint64_t n = 0; n < 2000; ++n) {
        long double hi = (n + 1) * a + rho, lo = n * a + rho;
        if (std::abs(hi - std::round(hi)) < 1e-9L || std::abs(lo - std::round(lo)) < 1e-9L) continue;
        auto l = slope.letter(n);
        ASSERT_TRUE(l.has_value()) << n;
        EXPECT_EQ(*l, static_cast<int>(std::floor(hi) - std::floor(lo))) << n;
    }
}

TEST(Sturmian, ComplexityIsNPlusOne) {
    std::vector<std::uint64_t> cf{1, 2, 1, 1, 3, 1, 2, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
    auto w = generate_prefix({SturmianSpec{cf, std::nullopt}}, 4000);
    FactorIndex index(w);
    for (std::size_t n = 1; n <= 40; ++n) EXPECT_EQ(index.complexity(n), n + 1) << n;
}

TEST(Sturmian, ShortTruncationIsRejectedWithRequiredTerms) {
    SturmianSlope slope({2}, std::nullopt);
    EXPECT_THROW(slope.letter_or_throw(1000), SpecError);
    try {
        slope.letter_or_throw(1000);
    } catch (const SpecError& e) {
        EXPECT_NE(std::string(e.what()).find("terms"), std::string::npos);
    }
    EXPECT_GT(slope.required_terms_estimate(1000), 1u);
    EXPECT_THROW(generate_prefix({SturmianSpec{{2}, std::nullopt}}, 100), SpecError);
}

TEST(Sturmian, DeterminedLettersAgreeAcrossLongerTruncations) {
    std::vector<std::uint64_t> cf{1, 3, 1, 2, 2, 1, 1, 4, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
    for (std::size_t cut : {4u, 8u, 12u}) {
        std::vector<std::uint64_t> head(cf.begin(), cf.begin() + cut);
        SturmianSlope a(head, Rational{1, 5}), b(cf, Rational{1, 5});
        for (std::uint64_t n = 0; n < 3000; ++n)
            if (auto l = a.letter(n)) {
                EXPECT_EQ(*l, *b.letter(n)) << "cut " << cut << " n " << n;
            }
    }
}
