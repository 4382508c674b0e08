// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace spectra;
using namespace fixtures;

namespace {

std::vector<std::string> words_of(const std::vector<PeriodicClass>& v) {
    std::vector<std::string> out;
    for (const auto& c : v) out.push_back(c.word);
    return out;
}

std::vector<std::string> names(const SpectrumPoset& p, const std::vector<std::size_t>& idx) {
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(p.nodes[i].cls.name);
    return out;
}

} // namespace

TEST(PeriodicSpectrum, Examples) {
    FactorIndex p01(generate_prefix(periodic("01"), 200));
    auto s = periodic_spectrum(p01, 4, 10);
    ASSERT_EQ(words_of(s), (std::vector<std::string>{"01"}));
    EXPECT_EQ(s[0].evidence, 100u);
    EXPECT_EQ(words_of(periodic_spectrum(FactorIndex(generate_prefix(radical_example(), 2000)), 3, 8)),
              (std::vector<std::string>{"x"}));
    EXPECT_EQ(words_of(periodic_spectrum(FactorIndex(generate_prefix(run_doubling(), 2000)), 3, 8)),
              (std::vector<std::string>{"0", "1"}));
    EXPECT_THROW(periodic_spectrum(p01, 16, 20), RangeError);
}

TEST(PeriodicSpectrum, RotationInvariant) {
    for (std::string u : {"001", "010", "100"}) {
        FactorIndex idx(generate_prefix(periodic(u), 300));
        EXPECT_EQ(words_of(periodic_spectrum(idx, 16, 8)), (std::vector<std::string>{"001"})) << u;
    }
    // (01)^2 is not primitive: only the root is reported
    EXPECT_EQ(words_of(periodic_spectrum(FactorIndex(generate_prefix(periodic("0101"), 300)), 16, 8)),
              (std::vector<std::string>{"01"}));
}

TEST(PeriodicSpectrum, MatchesBruteForceScan) {
    auto w = generate_prefix(chain(), 4096);
    FactorIndex idx(w);
    std::vector<std::string> brute;
    for (std::size_t q = 1; q <= 6; ++q)
        for (const auto& u : naive::distinct_windows(w, q))
            if (is_primitive(u) && least_rotation(u) == u && w.find(repeat(u, 8)) != std::string::npos) brute.push_back(u);
    EXPECT_EQ(words_of(periodic_spectrum(idx, 6, 8)), brute);
    EXPECT_EQ(brute, (std::vector<std::string>{"0"}));
}

TEST(Order, EquivalenceExamples) {
    EXPECT_TRUE(class_equiv(make_class("a", periodic("01"), 20), make_class("b", periodic("10"), 20), 20));
    EXPECT_FALSE(class_equiv(make_class("a", periodic("01"), 4), make_class("b", periodic("0011"), 4), 4));
    EXPECT_TRUE(class_equiv(make_class("m", fibonacci(), 30), make_class("s", fibonacci_sturmian(), 30), 30));
}

TEST(Order, LeqExamples) {
    EXPECT_TRUE(class_leq(make_class("rd", run_doubling(), 30), make_class("zero", periodic("0"), 30), 30));
    EXPECT_FALSE(class_leq(make_class("fib", fibonacci(), 3), make_class("zero", periodic("0"), 3), 3));
    auto f = make_class("fib", fibonacci(), 10);
    EXPECT_TRUE(class_leq(f, f, 10));
    EXPECT_THROW(class_leq(f, f, 11), RangeError);
    EXPECT_EQ(first_missing_factor(*make_class("zero", periodic("0"), 3).index, *f.index, 3), std::optional<std::string>("000"));
}

TEST(Flags, Examples) {
    auto p = make_class("p", periodic("01"), 20);
    EXPECT_TRUE(p.recurrent() && p.uniformly_recurrent() && p.periodic());
    EXPECT_EQ(p.flags.periodic.guarantee, Guarantee::Exact);
    EXPECT_EQ(p.flags.period, "01");
    auto f = make_class("fib", fibonacci(), 20);
    EXPECT_TRUE(f.recurrent() && f.uniformly_recurrent());
    EXPECT_FALSE(f.periodic());
    EXPECT_EQ(f.flags.recurrent.guarantee, Guarantee::Stabilized);
    auto r = make_class("re", radical_example(), 20);
    EXPECT_FALSE(r.recurrent());
    EXPECT_FALSE(r.uniformly_recurrent());
    auto c = make_class("chain", chain(), 20);
    EXPECT_TRUE(c.recurrent());
    EXPECT_FALSE(c.uniformly_recurrent());
    EXPECT_FALSE(make_class("rd", run_doubling(), 20).recurrent());
    EXPECT_FALSE(make_class("tm", thue_morse(), 20).periodic());
}

TEST(Flags, RadicalExampleHasFactorOccurringOnce) {
    auto w = generate_prefix(radical_example(), 20000);
    EXPECT_EQ(w.find("yxxy"), 1u);
    EXPECT_EQ(w.find("yxxy", 2), std::string::npos);
}

TEST(Flags, EquivalentSpecsAgree) {
    auto a = make_class("m", fibonacci(), 30), b = make_class("s", fibonacci_sturmian(), 30);
    ASSERT_TRUE(class_equiv(a, b, 30));
    EXPECT_EQ(a.recurrent(), b.recurrent());
    EXPECT_EQ(a.uniformly_recurrent(), b.uniformly_recurrent());
    EXPECT_EQ(a.periodic(), b.periodic());
    auto x = make_class("01", periodic("01"), 30), y = make_class("1010", periodic("1010"), 30);
    EXPECT_EQ(x.flags.period, y.flags.period);
}

TEST(Poset, SingleNode) {
    auto p = build_poset(make_class("p01", periodic("01"), 20), {make_class("p01", periodic("01"), 20), make_class("p10", periodic("10"), 20)}, 20);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p.nodes[0].cls.name, "p01");
    EXPECT_EQ(p.nodes[0].merged, (std::vector<std::string>{"p10"}));
    EXPECT_EQ(p.root_node, std::optional<std::size_t>(0));
    EXPECT_EQ(longest_chain(p), 1u);
    auto e = minimal_and_maximal(p);
    EXPECT_EQ(e.minimal, e.maximal);
}

TEST(Poset, TwoNodeChain) {
    auto p = chain_poset();
    ASSERT_EQ(p.size(), 2u);
    EXPECT_TRUE(check_poset_axioms(p).empty());
    ASSERT_EQ(p.hasse.size(), 1u);
    EXPECT_EQ(p.nodes[p.hasse[0].first].cls.name, "chain");
    EXPECT_EQ(p.nodes[p.hasse[0].second].cls.name, "zero");
    auto e = minimal_and_maximal(p);
    EXPECT_EQ(names(p, e.minimal), (std::vector<std::string>{"chain"}));
    EXPECT_EQ(names(p, e.maximal), (std::vector<std::string>{"zero"}));
    EXPECT_TRUE(e.violations.empty());
    EXPECT_EQ(longest_chain(p), 2u);
}

TEST(Poset, Antichain) {
    auto p = antichain_poset();
    ASSERT_EQ(p.size(), 2u);
    EXPECT_TRUE(p.hasse.empty());
    EXPECT_FALSE(p.root_node.has_value());
    auto e = minimal_and_maximal(p);
    EXPECT_EQ(e.minimal.size(), 2u);
    EXPECT_EQ(e.maximal.size(), 2u);
    EXPECT_EQ(longest_chain(p), 1u);
}

TEST(Poset, ExcludesCandidatesAboveNothing) {
    auto p = build_poset(make_class("fib", fibonacci(), 20),
                         {make_class("fib", fibonacci(), 20), make_class("zero", periodic("0"), 20)}, 20);
    EXPECT_EQ(p.size(), 1u);
    EXPECT_EQ(p.excluded, (std::vector<std::string>{"zero"}));
}

TEST(Poset, RejectsNonRecurrentCandidate) {
    EXPECT_THROW(build_poset(make_class("fib", fibonacci(), 20), {make_class("re", radical_example(), 20)}, 20),
                 PreconditionError);
}

TEST(Poset, AxiomCheckDetectsTampering) {
    auto p = chain_poset();
    p.leq[1][0] = true;
    auto v = check_poset_axioms(p);
    ASSERT_FALSE(v.empty());
    EXPECT_NE(v[0].find("antisymmetric"), std::string::npos);
    auto q = chain_poset();
    q.nodes[1].cls.flags.uniformly_recurrent.value = false;
    EXPECT_EQ(minimal_and_maximal(q).violations.size(), 1u);
}

TEST(ProperUnion, Examples) {
    auto c = proper_union_check(chain_poset(), 40);
    ASSERT_TRUE(c.witness);
    EXPECT_TRUE(c.verified);
    EXPECT_NE(c.witness->find('1'), std::string::npos);
    auto f = proper_union_check(fibonacci_poset(), 40);
    EXPECT_EQ(f.witness, std::optional<std::string>("0"));
    EXPECT_THROW(proper_union_check(antichain_poset(), 40), PreconditionError);
}

TEST(Bounds, Fibonacci) {
    auto r = bounds_report(fibonacci_poset(100), 100);
    EXPECT_DOUBLE_EQ(r.root.c_star, 51.0 / 50.0);
    EXPECT_EQ(r.root.d_star, 1);
    EXPECT_EQ(r.root.window_lo, 50u);
    EXPECT_EQ(r.rec, 1u);
    EXPECT_DOUBLE_EQ(r.checks.front().rhs, 5.0);
    EXPECT_TRUE(r.all_pass());
}

TEST(Bounds, PeriodicAndChain) {
    auto p = bounds_report(build_poset(make_class("p", periodic("01"), 40), {make_class("p", periodic("01"), 40)}, 40), 40);
    auto per = std::find_if(p.checks.begin(), p.checks.end(), [](const BoundCheck& c) { return c.id == "per-vs-diff"; });
    EXPECT_DOUBLE_EQ(per->lhs, 1.0);
    EXPECT_DOUBLE_EQ(per->rhs, 1.0);
    EXPECT_TRUE(p.all_pass());
    auto c = bounds_report(chain_poset(), 40);
    EXPECT_EQ(c.chain_nodes, 2u);
    EXPECT_GE(c.root.c_star, 1.0);
    EXPECT_TRUE(c.all_pass());
    EXPECT_THROW(bounds_report(chain_poset(), 7), RangeError);
}

TEST(Bounds, LimsupProxyWindow) {
    FactorIndex idx(generate_prefix(thue_morse(), 4096));
    auto p = limsup_proxy(idx, 20);
    double best = 0;
    std::int64_t d = 0;
    for (std::size_t n = 10; n <= 20; ++n) {
        best = std::max(best, double(naive::complexity(idx.prefix(), n)) / double(n));
        if (n < 20) d = std::max<std::int64_t>(d, std::int64_t(naive::complexity(idx.prefix(), n + 1)) - std::int64_t(naive::complexity(idx.prefix(), n)));
    }
    EXPECT_DOUBLE_EQ(p.c_star, best);
    EXPECT_EQ(p.d_star, d);
}
