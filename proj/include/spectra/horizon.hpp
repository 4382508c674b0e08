// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>

#include "spectra/factor_index.hpp"
#include "spectra/wordgen.hpp"

namespace spectra {

/// Longest prefix the stabilization loop will generate.
inline constexpr std::size_t kMaxStabilizationPrefix = std::size_t{1} << 22;

namespace detail {

inline bool same_counts_up_to(const FactorIndex& a, const FactorIndex& b, std::size_t n) {
    for (std::size_t m = 1; m <= n; ++m)
        if (a.complexity(m) != b.complexity(m)) return false;
    return true;
}

/// Factor sets of a prefix only grow with the prefix, so equal per-length counts up to n
/// mean equal factor sets up to n. Stabilized = unchanged across L -> 2L -> 4L.
inline Horizon stabilize(const WordSpec& spec, std::size_t n, std::size_t limit = kMaxStabilizationPrefix) {
    std::size_t len = std::max<std::size_t>(64, 2 * n + 2);
    auto index_at = [&](std::size_t l) { return FactorIndex(generate_prefix(spec, l)); };
    FactorIndex a = index_at(len);
    FactorIndex b = index_at(2 * len);
    while (4 * len <= limit) {
        FactorIndex c = index_at(4 * len);
        if (same_counts_up_to(a, b, n) && same_counts_up_to(b, c, n))
            return {n, Guarantee::Stabilized, 4 * len};
        a = std::move(b);
        b = std::move(c);
        len *= 2;
    }
    return {n, Guarantee::Approximate, 2 * len};
}

inline std::size_t longest_sturmian_prefix(const SturmianSpec& s, std::size_t limit) {
    SturmianSlope slope(s.cf_terms, s.intercept);
    std::size_t l = 0;
    while (l < limit && slope.letter(l)) ++l;
    return l;
}

} // namespace detail

/// Prefix length and guarantee level for factor statements of length <= n.
///   periodic:  Exact, one period plus n;
///   blocks:    Exact, through the stage after every growing run reaches length n;
///   morphic:   Stabilized by prefix doubling (Approximate if the cap is hit);
///   sturmian:  as morphic, capped by the precision of the given slope terms;
///   prefix:    Approximate, the whole explicit prefix.
inline Horizon horizon_for(const WordSpec& spec, std::size_t n) {
    if (n < 1) throw RangeError("horizon_for: n must be >= 1");
    validate(spec);
    if (auto p = spec.as<PeriodicSpec>()) return {n, Guarantee::Exact, p->period.size() + n};
    if (auto b = spec.as<BlocksSpec>()) {
        auto program = block_program(*b);
        constexpr std::uint64_t cap = std::uint64_t{1} << 40;
        bool any_growing = std::any_of(program.begin(), program.end(), [](const RunRule& r) { return r.grows(); });
        auto stage_len = [&](std::uint64_t k) {
            std::uint64_t s = 0;
            for (const auto& r : program) s += r.length(k, cap);
            return s;
        };
        if (!any_growing) return {n, Guarantee::Exact, static_cast<std::size_t>(stage_len(0)) + n};
        std::uint64_t k_stable = 0;
        auto long_enough = [&](std::uint64_t k) {
            for (const auto& r : program)
                if (r.grows() && r.length(k, cap) < n) return false;
            return true;
        };
        while (!long_enough(k_stable)) ++k_stable;
        std::uint64_t total = 0;
        for (std::uint64_t k = 0; k <= k_stable + 1; ++k) total += stage_len(k);
        return {n, Guarantee::Exact, static_cast<std::size_t>(total)};
    }
    if (auto s = spec.as<PrefixSpec>()) {
        if (n > s->symbols.size())
            throw RangeError("horizon_for: n exceeds explicit prefix length " + std::to_string(s->symbols.size()));
        return {n, Guarantee::Approximate, s->symbols.size()};
    }
    if (auto s = spec.as<SturmianSpec>()) {
        auto want = std::max<std::size_t>(64, 2 * n + 2);
        auto avail = detail::longest_sturmian_prefix(*s, std::min(kMaxStabilizationPrefix, 256 * want));
        if (avail < 4 * want) {
            if (avail < n) throw SpecError("sturmian: slope terms determine only " + std::to_string(avail) +
                                           " letters, fewer than n=" + std::to_string(n));
            return {n, Guarantee::Approximate, avail};
        }
        return detail::stabilize(spec, n, avail);
    }
    return detail::stabilize(spec, n);
}

/// Factor index over the horizon prefix for length-n statements.
inline std::shared_ptr<const FactorIndex> index_for(const WordSpec& spec, std::size_t n,
                                                    std::uint64_t cap = FactorIndex::kDefaultEnumerationCap) {
    auto h = horizon_for(spec, n);
    return std::make_shared<const FactorIndex>(generate_prefix(spec, h.prefix_len), h, cap);
}

inline constexpr std::size_t kDefaultLongPrefix = 8192;

/// Index over a prefix of at least `min_len` symbols (when the generator can supply them),
/// carrying the horizon of length-`horizon_n` statements.
inline std::shared_ptr<const FactorIndex> long_index(const WordSpec& spec, std::size_t horizon_n,
                                                      std::size_t min_len = kDefaultLongPrefix) {
    auto h = horizon_for(spec, horizon_n);
    std::size_t len = std::max(h.prefix_len, min_len);
    if (auto p = spec.as<PrefixSpec>()) len = p->symbols.size();
    if (auto s = spec.as<SturmianSpec>()) {
        SturmianSlope slope(s->cf_terms, s->intercept);
        while (len > h.prefix_len && !slope.letter(len - 1)) len /= 2;
        len = std::max(len, h.prefix_len);
    }
    Horizon out = h;
    out.prefix_len = len;
    return std::make_shared<const FactorIndex>(generate_prefix(spec, len), out);
}

} // namespace spectra
