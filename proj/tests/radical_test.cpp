// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "spectra/radical.hpp"

using namespace spectra;
using namespace fixtures;

namespace {

// Smallest N such that every length-N factor of `text` has a length-n window avoiding z.
std::optional<std::size_t> brute_min_N(const std::string& text, const std::string& z, std::size_t n, std::size_t N_max) {
    for (std::size_t N = n; N <= N_max; ++N) {
        bool ok = true;
        for (std::size_t i = 0; ok && i + N <= text.size(); ++i) {
            bool found = false;
            for (std::size_t j = i; !found && j + n <= i + N; ++j) found = text.substr(j, n).find(z) == std::string::npos;
            ok = found;
        }
        if (ok) return N;
    }
    return std::nullopt;
}

const FactorIndex& re_index() {
    static auto idx = long_index(radical_example(), 40);
    return *idx;
}

} // namespace

TEST(RadicalWindow, RadicalExampleInRadical) {
    auto v = radical_window_test(re_index(), "xy", 2, 200);
    ASSERT_EQ(v.kind, RadicalKind::InRadical);
    ASSERT_EQ(v.table.size(), 1u);
    EXPECT_EQ(v.table[0].N, brute_min_N(re_index().prefix(), "xy", 2, 200));
    EXPECT_EQ(v.table[0].N, 3u);
}

TEST(RadicalWindow, WitnessIsMinimal) {
    const auto& text = re_index().prefix();
    for (std::string z : {"y", "xy", "yx", "xxy"})
        for (std::size_t n = z.size(); n <= z.size() + 3; ++n) {
            auto v = radical_window_test(re_index(), z, n, 200);
            ASSERT_EQ(v.kind, RadicalKind::InRadical) << z << " " << n;
            auto N = v.table[0].N;
            EXPECT_TRUE(verify_window_witness(text, z, n, N));
            if (N > n) {
                EXPECT_FALSE(verify_window_witness(text, z, n, N - 1)) << z << " " << n;
            }
            EXPECT_EQ(std::optional<std::size_t>(N), brute_min_N(text, z, n, 200)) << z << " " << n;
        }
}

TEST(RadicalWindow, NotInRadical) {
    auto fib = long_index(fibonacci(), 40);
    auto v = radical_window_test(*fib, "0", 2, 200);
    ASSERT_EQ(v.kind, RadicalKind::NotInRadical);
    EXPECT_EQ(v.failing_n, 2u);
    EXPECT_EQ(v.evidence.size(), 200u);
    EXPECT_TRUE(fib->is_factor(v.evidence));
    auto x = radical_window_test(re_index(), "x", 1, 200);
    ASSERT_EQ(x.kind, RadicalKind::NotInRadical);
    EXPECT_EQ(x.evidence, std::string(200, 'x'));
}

TEST(RadicalWindow, BadInputs) {
    EXPECT_THROW(radical_window_test(re_index(), "yy", 2, 100), PreconditionError);
    EXPECT_THROW(radical_window_test(re_index(), "", 1, 100), PreconditionError);
    EXPECT_THROW(radical_window_test(re_index(), "xy", 1, 100), RangeError);
    EXPECT_THROW(radical_window_test(re_index(), "xy", 2, re_index().size() + 1), RangeError);
}

TEST(RadicalWindow, ShortBudgetIsInconclusive) {
    auto v = radical_window_test(re_index(), "xy", 5, 4);
    EXPECT_EQ(v.kind, RadicalKind::Inconclusive);
}

TEST(RadicalConcat, Examples) {
    auto p = long_index(periodic("01"), 40);
    auto v = radical_concat_test(*p, "01");
    ASSERT_EQ(v.kind, RadicalKind::NotInRadical);
    EXPECT_EQ(v.generators, (std::vector<std::string>{"01"}));
    EXPECT_GE(v.evidence.size(), 100u);
    EXPECT_TRUE(p->is_factor(v.evidence));
    for (std::string z : {"y", "xy"}) {
        auto r = radical_concat_test(re_index(), z);
        EXPECT_EQ(r.kind, RadicalKind::InRadical) << z;
        EXPECT_NE(r.note.find("bounded-scale"), std::string::npos);
    }
    auto fib = long_index(fibonacci(), 40);
    auto f = radical_concat_test(*fib, "00");
    ASSERT_EQ(f.kind, RadicalKind::NotInRadical);
    EXPECT_TRUE(fib->is_factor(f.evidence));
    EXPECT_THROW(radical_concat_test(re_index(), "yy"), PreconditionError);
}

TEST(RadicalConcat, AgreesWithWindowTest) {
    for (std::size_t m = 1; m <= 4; ++m)
        for (const auto& z : re_index().factors_of_length(m)) {
            auto w = classify_radical(re_index(), z);
            auto c = radical_concat_test(re_index(), z);
            bool contradict = (w.kind == RadicalKind::InRadical && c.kind == RadicalKind::NotInRadical) ||
                              (w.kind == RadicalKind::NotInRadical && c.kind == RadicalKind::InRadical);
            EXPECT_FALSE(contradict) << z;
        }
}

TEST(RadicalComplement, Examples) {
    auto re = radical_complement(re_index(), 4);
    EXPECT_EQ(re.members, (std::vector<std::string>{"x", "xx", "xxx", "xxxx"}));
    EXPECT_TRUE(re.factor_closed);
    EXPECT_FALSE(re.approximate);
    for (const auto& r : re.radical) EXPECT_NE(r.find('y'), std::string::npos) << r;

    for (auto spec : {fibonacci(), periodic("01")}) {
        auto idx = long_index(spec, 40);
        auto c = radical_complement(*idx, 4);
        std::vector<std::string> all;
        for (std::size_t m = 1; m <= 4; ++m)
            for (const auto& f : idx->factors_of_length(m)) all.push_back(f);
        std::sort(all.begin(), all.end());
        EXPECT_EQ(c.members, all);
        EXPECT_TRUE(c.radical.empty());
    }
}

TEST(RadicalComplement, UniformlyRecurrentWordsHaveEmptyRadical) {
    for (auto spec : {thue_morse(), fibonacci_sturmian()}) {
        auto idx = long_index(spec, 40);
        for (std::size_t m = 1; m <= 3; ++m)
            for (const auto& z : idx->factors_of_length(m))
                EXPECT_NE(classify_radical(*idx, z).kind, RadicalKind::InRadical) << z;
    }
}

TEST(RadicalIdeal, Examples) {
    auto c = radical_ideal_property_check(re_index(), "xy", 5);
    EXPECT_TRUE(c.pass);
    EXPECT_GT(c.checked, 0u);
    EXPECT_THROW(radical_ideal_property_check(re_index(), "x", 5), PreconditionError);
    auto fib = long_index(fibonacci(), 40);
    auto s = radical_ideal_property_suite(*fib, 4);
    EXPECT_TRUE(s.pass);
    EXPECT_EQ(s.checked, 0u);
}

TEST(RadicalIdeal, StarvedBudgetsReportOffender) {
    RadicalBudgets tight;
    tight.n_span = 0;
    tight.N_max = 3;
    ASSERT_EQ(classify_radical(re_index(), "y", tight).kind, RadicalKind::InRadical);
    auto c = radical_ideal_property_check(re_index(), "y", 5, tight);
    EXPECT_FALSE(c.pass);
    ASSERT_TRUE(c.offending);
    EXPECT_NE(c.offending->find('y'), std::string::npos);
    EXPECT_NE(c.offending_kind, RadicalKind::InRadical);
}
