// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Spectra of a word: periodic classes above it, the order between word classes given
// by reverse inclusion of factor sets, and the finite poset of recurrent classes built
// from a curated candidate list.

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "spectra/factor_index.hpp"
#include "spectra/horizon.hpp"
#include "spectra/wordgen.hpp"
#include "spectra/words.hpp"

namespace spectra {

inline constexpr std::size_t kDefaultMaxPeriod = 16;
inline constexpr std::size_t kDefaultPowerThreshold = 8;

// ---------------------------------------------------------------------------
// Periodic spectrum

struct PeriodicClass {
    std::string word;          // primitive, least among its rotations
    std::size_t evidence = 0;  // largest K with word^K a factor of the prefix

    std::size_t period() const { return word.size(); }
    friend bool operator==(const PeriodicClass& a, const PeriodicClass& b) { return a.word == b.word; }
};

/// Canonical primitive u with |u| <= max_period and u^power a factor of the prefix.
inline std::vector<PeriodicClass> periodic_spectrum(const FactorIndex& index, std::size_t max_period = kDefaultMaxPeriod,
                                                    std::size_t power = kDefaultPowerThreshold) {
    if (max_period == 0 || power == 0) throw RangeError("periodic_spectrum: P and K must be positive");
    if (max_period * power > index.size())
        throw RangeError("periodic_spectrum: P*K=" + std::to_string(max_period * power) + " exceeds prefix length " +
                         std::to_string(index.size()));
    std::vector<PeriodicClass> out;
    for (std::size_t q = 1; q <= max_period; ++q) {
        index.for_each_factor(q, [&](std::string_view u) {
            if (!is_primitive(u) || least_rotation_start(u) != 0) return;
            if (!index.is_factor(repeat(u, power))) return;
            auto s = index.initial_state();
            std::size_t matched = 0;
            while (true) {
                s = index.step(s, u[matched % q]);
                if (s == FactorIndex::kNone) break;
                ++matched;
            }
            out.push_back({std::string(u), matched / q});
        });
    }
    return out;
}

// ---------------------------------------------------------------------------
// Recurrence flags

struct Flag {
    bool value = false;
    Guarantee guarantee = Guarantee::Approximate;
};

struct RecurrenceFlags {
    Flag recurrent;
    Flag uniformly_recurrent;
    Flag periodic;
    std::string period;  // canonical exhibited period when periodic
};

namespace detail {

/// Smallest N such that every length-N window of w contains u; w.size() + 1 if none.
inline std::size_t appearance_bound(std::string_view w, std::string_view u) {
    std::size_t first = w.find(u);
    if (first == std::string_view::npos) return w.size() + 1;
    std::size_t longest_free = first + u.size() - 1;  // window ending just before the first occurrence completes
    std::size_t prev = first;
    for (std::size_t pos = w.find(u, first + 1); pos != std::string_view::npos; pos = w.find(u, pos + 1)) {
        longest_free = std::max(longest_free, pos - prev + u.size() - 2);
        prev = pos;
    }
    longest_free = std::max(longest_free, w.size() - 1 - prev);
    return std::min(longest_free + 1, w.size() + 1);
}

inline bool is_primitive_morphism(const MorphicSpec& m) {
    std::vector<char> letters;
    for (const auto& [c, img] : m.rules) letters.push_back(c);
    const std::size_t d = letters.size();
    auto idx = [&](char c) { return static_cast<std::size_t>(std::find(letters.begin(), letters.end(), c) - letters.begin()); };
    std::vector<std::vector<bool>> base(d, std::vector<bool>(d, false));
    for (std::size_t i = 0; i < d; ++i)
        for (char c : m.rules.at(letters[i])) base[i][idx(c)] = true;
    auto power = base;
    const std::size_t bound = (d - 1) * (d - 1) + 1;
    for (std::size_t k = 1; k <= bound; ++k) {
        bool positive = true;
        for (const auto& row : power)
            for (bool b : row) positive = positive && b;
        if (positive) return true;
        std::vector<std::vector<bool>> next(d, std::vector<bool>(d, false));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (power[i][j])
                    for (std::size_t l = 0; l < d; ++l)
                        if (base[j][l]) next[i][l] = true;
        power = std::move(next);
    }
    return false;
}

inline std::string long_prefix(const WordSpec& spec, const FactorIndex& index, std::size_t length) {
    if (auto p = spec.as<PrefixSpec>()) return p->symbols;
    if (auto s = spec.as<SturmianSpec>()) {
        SturmianSlope slope(s->cf_terms, s->intercept);
        std::string out;
        while (out.size() < length) {
            auto l = slope.letter(out.size());
            if (!l) break;
            out.push_back(static_cast<char>('0' + *l));
        }
        if (out.size() < index.size()) return index.prefix();
        return out;
    }
    return generate_prefix(spec, length);
}

} // namespace detail

/// Finite-scale recurrence flags.
///   recurrent: every factor of length <= n of the horizon prefix w[0, L) occurs again
///     inside w[L, 8L), disjoint from its first occurrence;
///   uniformly recurrent: recurrent, and for every factor u with |u| <= min(n, 6) the
///     appearance bound of u is identical on w[0, 2L), w[0, 4L) and w[0, 8L);
///   periodic: uniformly recurrent, the long prefix has a period q <= L, and p(m) is
///     constant on [ceil(n/2), n].
inline RecurrenceFlags recurrence_flags(const WordSpec& spec, const FactorIndex& index, std::size_t n) {
    if (n > index.horizon().n_max)
        throw RangeError("recurrence_flags: n exceeds index horizon " + std::to_string(index.horizon().n_max));
    const std::size_t head_len = index.size();
    std::string longw = detail::long_prefix(spec, index, 8 * head_len);

    RecurrenceFlags flags;
    Guarantee g = Guarantee::Approximate;
    if (spec.as<PeriodicSpec>()) {
        g = Guarantee::Exact;
    } else if (auto m = spec.as<MorphicSpec>()) {
        if (index.horizon().guarantee != Guarantee::Approximate && detail::is_primitive_morphism(*m))
            g = Guarantee::Stabilized;
    } else if (spec.as<SturmianSpec>()) {
        if (index.horizon().guarantee != Guarantee::Approximate) g = Guarantee::Stabilized;
    }

    // recurrence
    bool recurrent = false;
    std::string_view head = std::string_view(longw).substr(0, head_len);
    std::string_view tail;
    if (longw.size() > head_len) {
        tail = std::string_view(longw).substr(head_len);
    } else {
        // explicit prefix: compare halves
        head = std::string_view(longw).substr(0, longw.size() / 2);
        tail = std::string_view(longw).substr(longw.size() / 2);
    }
    if (!tail.empty() && !head.empty()) {
        FactorIndex head_index{std::string(head)};
        FactorIndex tail_index{std::string(tail)};
        recurrent = true;
        for (std::size_t m = 1; m <= std::min(n, head.size()) && recurrent; ++m)
            head_index.for_each_factor(m, [&](std::string_view u) {
                if (recurrent && !tail_index.is_factor(u)) recurrent = false;
            });
    }
    flags.recurrent = {recurrent, g};

    // uniform recurrence
    bool uniform = false;
    if (recurrent) {
        uniform = true;
        const std::size_t b = std::min<std::size_t>(n, 6);
        std::string_view whole(longw);
        std::size_t l2 = std::min(whole.size(), 2 * head_len);
        std::size_t l4 = std::min(whole.size(), 4 * head_len);
        for (std::size_t m = 1; m <= b && uniform; ++m)
            index.for_each_factor(m, [&](std::string_view u) {
                if (!uniform) return;
                auto a2 = detail::appearance_bound(whole.substr(0, l2), u);
                auto a4 = detail::appearance_bound(whole.substr(0, l4), u);
                auto a8 = detail::appearance_bound(whole, u);
                if (a2 != a4 || a4 != a8 || a8 > whole.size()) uniform = false;
            });
    }
    flags.uniformly_recurrent = {uniform, g};

    // periodicity
    bool periodic = false;
    if (uniform) {
        const std::size_t lo = (n + 1) / 2;
        bool flat = true;
        for (std::size_t m = std::max<std::size_t>(lo, 1); m <= n; ++m)
            flat = flat && index.complexity(m) == index.complexity(std::max<std::size_t>(lo, 1));
        if (flat) {
            for (std::size_t q = 1; q <= head_len && 2 * q <= longw.size(); ++q) {
                bool ok = true;
                for (std::size_t i = 0; i + q < longw.size() && ok; ++i) ok = longw[i] == longw[i + q];
                if (ok) {
                    periodic = true;
                    flags.period = canonical_period(std::string_view(longw).substr(0, q));
                    break;
                }
            }
        }
    }
    flags.periodic = {periodic, g};
    return flags;
}

// ---------------------------------------------------------------------------
// Word classes and the order between them

struct SpectrumClass {
    std::string name;
    WordSpec spec;
    std::shared_ptr<const FactorIndex> index;
    RecurrenceFlags flags;

    std::size_t horizon() const { return index->horizon().n_max; }
    Guarantee guarantee() const { return index->horizon().guarantee; }
    bool recurrent() const { return flags.recurrent.value; }
    bool uniformly_recurrent() const { return flags.uniformly_recurrent.value; }
    bool periodic() const { return flags.periodic.value; }
};

/// Builds the horizon-n index of `spec` and its recurrence flags.
inline SpectrumClass make_class(std::string name, WordSpec spec, std::size_t n) {
    auto index = index_for(spec, n);
    auto flags = recurrence_flags(spec, *index, n);
    return {std::move(name), std::move(spec), std::move(index), std::move(flags)};
}

/// A factor of `sub` of length <= h that is not a factor of `super` (first in depth-first
/// lexicographic order), or nullopt when there is none.
inline std::optional<std::string> first_missing_factor(const FactorIndex& sub, const FactorIndex& super, std::size_t h) {
    struct Frame {
        std::int32_t sub_state, super_state;
        std::size_t next_sym;
    };
    const std::string& letters = sub.alphabet();
    std::vector<Frame> stack{{sub.initial_state(), super.initial_state(), 0}};
    std::string word;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next_sym == letters.size() || word.size() == h) {
            stack.pop_back();
            if (!word.empty()) word.pop_back();
            continue;
        }
        char c = letters[f.next_sym++];
        auto t = sub.step(f.sub_state, c);
        if (t == FactorIndex::kNone) continue;
        auto u = super.step(f.super_state, c);
        word.push_back(c);
        if (u == FactorIndex::kNone) return word;
        stack.push_back({t, u, 0});
    }
    return std::nullopt;
}

namespace detail {
inline void require_comparable(const SpectrumClass& a, const SpectrumClass& b, std::size_t h, const char* what) {
    if (h > a.horizon() || h > b.horizon())
        throw RangeError(std::string(what) + ": horizon " + std::to_string(h) + " exceeds evidence of '" +
                         (h > a.horizon() ? a.name : b.name) + "' (" +
                         std::to_string(std::min(a.horizon(), b.horizon())) + ")");
}
} // namespace detail

/// [a] <= [b]: every length-<=h factor of b is a factor of a.
inline bool class_leq(const SpectrumClass& a, const SpectrumClass& b, std::size_t h) {
    detail::require_comparable(a, b, h, "class_leq");
    return !first_missing_factor(*b.index, *a.index, h).has_value();
}

/// Factor sets agree up to length h.
inline bool class_equiv(const SpectrumClass& a, const SpectrumClass& b, std::size_t h) {
    return class_leq(a, b, h) && class_leq(b, a, h);
}

inline Guarantee comparison_guarantee(const SpectrumClass& a, const SpectrumClass& b) {
    return weaker(a.guarantee(), b.guarantee());
}

// ---------------------------------------------------------------------------
// The poset

struct PosetNode {
    SpectrumClass cls;
    std::vector<std::string> merged;  // names of equivalent candidates folded into this node
};

struct SpectrumPoset {
    SpectrumClass root;
    std::vector<PosetNode> nodes;
    std::vector<std::vector<bool>> leq;  // leq[i][j]: node i <= node j
    std::vector<std::pair<std::size_t, std::size_t>> hasse;  // covering pairs (lower, upper)
    std::vector<std::string> excluded;  // candidates whose factors are not all factors of the root
    std::optional<std::size_t> root_node;  // node equivalent to the root, if any
    std::size_t horizon = 0;

    std::size_t size() const { return nodes.size(); }
    bool strictly_below(std::size_t i, std::size_t j) const { return i != j && leq[i][j]; }
};

/// Builds Rec(root) restricted to the curated candidates at horizon h.
inline SpectrumPoset build_poset(SpectrumClass root, std::vector<SpectrumClass> candidates, std::size_t h) {
    for (const auto& c : candidates)
        if (!c.recurrent())
            throw PreconditionError("build_poset: candidate '" + c.name + "' is not recurrent");
    SpectrumPoset poset{std::move(root), {}, {}, {}, {}, std::nullopt, h};
    std::sort(candidates.begin(), candidates.end(),
              [](const SpectrumClass& a, const SpectrumClass& b) { return a.name < b.name; });
    for (auto& c : candidates) {
        if (!class_leq(poset.root, c, h)) {
            poset.excluded.push_back(c.name);
            continue;
        }
        auto same = std::find_if(poset.nodes.begin(), poset.nodes.end(),
                                 [&](const PosetNode& node) { return class_equiv(node.cls, c, h); });
        if (same != poset.nodes.end()) {
            same->merged.push_back(c.name);
            continue;
        }
        poset.nodes.push_back({std::move(c), {}});
    }
    const std::size_t k = poset.nodes.size();
    poset.leq.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            poset.leq[i][j] = i == j || class_leq(poset.nodes[i].cls, poset.nodes[j].cls, h);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (!poset.strictly_below(i, j)) continue;
            bool covered = true;
            for (std::size_t m = 0; m < k && covered; ++m)
                if (m != i && m != j && poset.leq[i][m] && poset.leq[m][j]) covered = false;
            if (covered) poset.hasse.emplace_back(i, j);
        }
    for (std::size_t i = 0; i < k; ++i)
        if (class_equiv(poset.root, poset.nodes[i].cls, h)) poset.root_node = i;
    return poset;
}

/// Violations of reflexivity, antisymmetry and transitivity, as messages.
inline std::vector<std::string> check_poset_axioms(const SpectrumPoset& poset) {
    std::vector<std::string> out;
    const std::size_t k = poset.size();
    auto nm = [&](std::size_t i) { return poset.nodes[i].cls.name; };
    for (std::size_t i = 0; i < k; ++i) {
        if (!poset.leq[i][i]) out.push_back("not reflexive at " + nm(i));
        for (std::size_t j = 0; j < k; ++j) {
            if (i != j && poset.leq[i][j] && poset.leq[j][i]) out.push_back("not antisymmetric: " + nm(i) + ", " + nm(j));
            for (std::size_t m = 0; m < k; ++m)
                if (poset.leq[i][j] && poset.leq[j][m] && !poset.leq[i][m])
                    out.push_back("not transitive: " + nm(i) + " <= " + nm(j) + " <= " + nm(m));
        }
    }
    return out;
}

struct Extremes {
    std::vector<std::size_t> minimal;
    std::vector<std::size_t> maximal;
    std::vector<std::string> violations;  // maximal nodes not flagged uniformly recurrent
};

inline Extremes minimal_and_maximal(const SpectrumPoset& poset) {
    Extremes e;
    const std::size_t k = poset.size();
    for (std::size_t i = 0; i < k; ++i) {
        bool is_min = true, is_max = true;
        for (std::size_t j = 0; j < k; ++j) {
            if (poset.strictly_below(j, i)) is_min = false;
            if (poset.strictly_below(i, j)) is_max = false;
        }
        if (is_min) e.minimal.push_back(i);
        if (is_max) {
            e.maximal.push_back(i);
            if (!poset.nodes[i].cls.uniformly_recurrent())
                e.violations.push_back("maximal node '" + poset.nodes[i].cls.name + "' is not flagged uniformly recurrent");
        }
    }
    return e;
}

/// Number of nodes on a longest chain (0 for an empty poset).
inline std::size_t longest_chain(const SpectrumPoset& poset) {
    const std::size_t k = poset.size();
    // nodes sorted by number of strict predecessors form a linear extension
    std::vector<std::size_t> order(k), below(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) below[i] += poset.strictly_below(j, i) ? 1 : 0;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return below[a] < below[b]; });
    std::vector<std::size_t> best(k, 1);
    std::size_t out = 0;
    for (auto i : order) {
        for (auto j : order)
            if (poset.strictly_below(j, i)) best[i] = std::max(best[i], best[j] + 1);
        out = std::max(out, best[i]);
    }
    return out;
}

struct UnionCheck {
    std::optional<std::string> witness;  // factor of the root in no strictly larger node
    bool verified = false;               // witness re-checked by direct membership
    std::size_t lengths_exhausted = 0;   // search depth reached without a witness
};

/// A factor of the recurrent root that lies in no strictly larger node.
inline UnionCheck proper_union_check(const SpectrumPoset& poset, std::size_t h) {
    const auto& root = poset.root;
    if (!root.recurrent())
        throw PreconditionError("proper_union_check: root '" + root.name + "' is not recurrent");
    std::vector<const FactorIndex*> larger;
    for (std::size_t i = 0; i < poset.size(); ++i)
        if (!poset.root_node || *poset.root_node != i) larger.push_back(poset.nodes[i].cls.index.get());
    UnionCheck out;
    h = std::min(h, root.horizon());
    for (std::size_t m = 1; m <= h && !out.witness; ++m) {
        root.index->for_each_factor(m, [&](std::string_view u) {
            if (out.witness) return;
            if (std::none_of(larger.begin(), larger.end(), [&](const FactorIndex* x) { return x->is_factor(u); }))
                out.witness = std::string(u);
        });
        out.lengths_exhausted = out.witness ? m - 1 : m;
    }
    if (out.witness)
        out.verified = root.index->is_factor(*out.witness) &&
                       std::none_of(larger.begin(), larger.end(), [&](const FactorIndex* x) { return x->is_factor(*out.witness); });
    return out;
}

// ---------------------------------------------------------------------------
// Bound report

inline constexpr std::size_t kMinBoundsHorizon = 8;
inline constexpr double kBoundSlack = 1e-12;  // floating slack on lhs <= rhs

struct LimsupProxy {
    std::size_t window_lo = 0, window_hi = 0;
    double c_star = 0;         // max p(n)/n on [lo, hi]
    std::int64_t d_star = 0;   // max p(n+1) - p(n) for n, n+1 in [lo, hi]
};

inline LimsupProxy limsup_proxy(const FactorIndex& index, std::size_t h) {
    if (h < kMinBoundsHorizon)
        throw RangeError("bounds: horizon " + std::to_string(h) + " too small; minimum usable horizon is " +
                         std::to_string(kMinBoundsHorizon));
    if (h > index.horizon().n_max)
        throw RangeError("bounds: horizon " + std::to_string(h) + " exceeds index horizon " +
                         std::to_string(index.horizon().n_max));
    LimsupProxy p{(h + 1) / 2, h, 0.0, 0};
    for (std::size_t n = p.window_lo; n <= p.window_hi; ++n) {
        p.c_star = std::max(p.c_star, static_cast<double>(index.complexity(n)) / static_cast<double>(n));
        if (n + 1 <= p.window_hi)
            p.d_star = std::max(p.d_star, static_cast<std::int64_t>(index.complexity(n + 1)) -
                                              static_cast<std::int64_t>(index.complexity(n)));
    }
    return p;
}

struct BoundCheck {
    std::string name;
    std::string id;
    double lhs = 0;
    double rhs = 0;
    bool applicable = true;
    bool pass = true;
    std::string note;
};

struct BoundsReport {
    LimsupProxy root;
    std::size_t rec = 0, urec = 0, per = 0;
    std::size_t chain_nodes = 0;
    std::size_t nonperiodic_minimal = 0;
    std::vector<BoundCheck> checks;
    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return !c.applicable || c.pass; });
    }
};

inline double factorial(std::uint64_t n) {
    double f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
    return f;
}

/// Every quantitative bound on the spectra, with the finite-horizon proxies C*, D*
/// substituted for the limsups.
inline BoundsReport bounds_report(const SpectrumPoset& poset, std::size_t h) {
    BoundsReport r;
    r.root = limsup_proxy(*poset.root.index, h);
    const double c = r.root.c_star;
    const double d = static_cast<double>(r.root.d_star);
    const double ceil_fact_sq = std::pow(factorial(static_cast<std::uint64_t>(std::ceil(c))), 2);
    r.rec = poset.size();
    for (const auto& node : poset.nodes) {
        r.urec += node.cls.uniformly_recurrent() ? 1 : 0;
        r.per += node.cls.periodic() ? 1 : 0;
    }
    r.chain_nodes = longest_chain(poset);
    auto ext = minimal_and_maximal(poset);
    for (auto i : ext.minimal) r.nonperiodic_minimal += poset.nodes[i].cls.periodic() ? 0 : 1;
    const bool root_linear_recurrent = poset.root.recurrent() && !poset.root.periodic();

    auto add = [&](std::string name, std::string id, double lhs, double rhs, bool applicable, std::string note = {}) {
        r.checks.push_back({std::move(name), std::move(id), lhs, rhs, applicable, lhs <= rhs + kBoundSlack, std::move(note)});
    };
    add("rec <= D* + ceil(C*)!^2", "rec-count", double(r.rec), d + ceil_fact_sq, true);
    add("urec <= D* + 1 + C*^2", "urec-count", double(r.urec), d + 1 + c * c, true);
    add("rec <= per + ceil(C*)!^2 - 1", "rec-vs-per", double(r.rec), double(r.per) + ceil_fact_sq - 1, true);
    add("per <= D* + 1", "per-vs-diff", double(r.per), d + 1, true);
    add("per <= C*", "per-vs-slope", double(r.per), c, root_linear_recurrent,
        root_linear_recurrent ? "" : "root not recurrent and aperiodic");
    add("chain nodes <= 1 + C*", "chain-length", double(r.chain_nodes), 1 + c, true,
        "edges = " + std::to_string(r.chain_nodes == 0 ? 0 : r.chain_nodes - 1));
    add("non-periodic minimal <= C*", "nonperiodic-minimal", double(r.nonperiodic_minimal), c, true);
    for (auto [lo, hi] : poset.hasse) {
        const auto& u = poset.nodes[lo].cls;
        const auto& v = poset.nodes[hi].cls;
        bool applicable = u.recurrent() && !u.periodic();
        double cu = limsup_proxy(*u.index, h).c_star;
        double cv = limsup_proxy(*v.index, h).c_star;
        add("C*(" + v.name + ") <= C*(" + u.name + ") - 1", "slope-drop", cv, cu - 1, applicable,
            applicable ? "" : "lower class periodic");
    }
    bool chain_ok = true;
    for (const auto& node : poset.nodes) {
        const auto& f = node.cls.flags;
        if (f.periodic.value && !f.uniformly_recurrent.value) chain_ok = false;
        if (f.uniformly_recurrent.value && !f.recurrent.value) chain_ok = false;
    }
    add("Per subset URec subset Rec", "containment", chain_ok ? 0 : 1, 0, true);
    return r;
}

} // namespace spectra
