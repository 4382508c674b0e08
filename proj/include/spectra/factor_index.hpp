// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Immutable factor index over a finite prefix, backed by a suffix automaton.
//
// Every path from the initial state spells a distinct factor of the prefix; a state v
// stands for the factors of lengths (len(link(v)), len(v)], which is what the per-length
// complexity table is swept from.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/common.hpp"

namespace spectra {

struct ComplexityProfile {
    std::vector<std::uint64_t> counts;      // counts[i] = p(i + 1)
    std::vector<std::int64_t> differences;  // differences[i] = p(i + 2) - p(i + 1)
};

class FactorIndex {
public:
    static constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

    explicit FactorIndex(std::string prefix, std::optional<Horizon> horizon = std::nullopt,
                         std::uint64_t enumeration_cap = kDefaultEnumerationCap)
        : prefix_(std::move(prefix)), enumeration_cap_(enumeration_cap) {
        if (prefix_.empty()) throw RangeError("build_index: empty prefix");
        horizon_ = horizon.value_or(Horizon{prefix_.size(), Guarantee::Approximate, prefix_.size()});
        if (horizon_.n_max > prefix_.size()) horizon_.n_max = prefix_.size();
        code_.fill(-1);
        std::array<bool, 256> seen{};
        for (unsigned char c : prefix_) seen[c] = true;
        for (int c = 0; c < 256; ++c)
            if (seen[c]) {
                code_[c] = static_cast<std::int16_t>(alphabet_.size());
                alphabet_.push_back(static_cast<char>(c));
            }
        build();
        sweep_counts();
    }

    const std::string& prefix() const { return prefix_; }
    const std::string& alphabet() const { return alphabet_; }
    const Horizon& horizon() const { return horizon_; }
    std::size_t size() const { return prefix_.size(); }
    std::size_t state_count() const { return len_.size(); }
    std::uint64_t enumeration_cap() const { return enumeration_cap_; }

    // -- automaton access -------------------------------------------------
    static constexpr std::int32_t kNone = -1;
    std::int32_t initial_state() const { return 0; }
    std::int32_t step(std::int32_t state, char c) const {
        auto code = code_[static_cast<unsigned char>(c)];
        if (state == kNone || code < 0) return kNone;
        return next_[static_cast<std::size_t>(state) * alphabet_.size() + code];
    }
    std::int32_t walk(std::string_view u) const {
        std::int32_t s = initial_state();
        for (char c : u) {
            s = step(s, c);
            if (s == kNone) break;
        }
        return s;
    }

    // -- queries -----------------------------------------------------------

    /// True iff u occurs contiguously in the prefix. Foreign symbols give false.
    bool is_factor(std::string_view u) const { return walk(u) != kNone; }

    /// Number of distinct nonempty factors of the prefix.
    std::uint64_t distinct_factor_count() const { return total_; }

    /// p(n) of the prefix, 1 <= n <= |prefix|.
    std::uint64_t complexity(std::size_t n) const {
        if (n < 1 || n > prefix_.size())
            throw RangeError("complexity: n=" + std::to_string(n) + " outside [1, " +
                             std::to_string(prefix_.size()) + "]");
        return counts_[n];
    }

    ComplexityProfile complexity_profile(std::size_t n_max) const {
        require_horizon(n_max, "complexity_profile");
        ComplexityProfile out;
        for (std::size_t n = 1; n <= n_max; ++n) out.counts.push_back(complexity(n));
        for (std::size_t i = 0; i + 1 < out.counts.size(); ++i)
            out.differences.push_back(static_cast<std::int64_t>(out.counts[i + 1]) -
                                      static_cast<std::int64_t>(out.counts[i]));
        return out;
    }

    /// Calls f(word) for every distinct factor of length exactly n, in lexicographic
    /// order of the dense alphabet. No horizon or cap checks.
    template <class F> void for_each_factor(std::size_t n, F&& f) const {
        if (n == 0) {
            f(std::string_view{});
            return;
        }
        std::string word;
        std::vector<std::pair<std::int32_t, std::size_t>> stack; // (state, next symbol to try)
        stack.emplace_back(initial_state(), 0);
        const std::size_t sigma = alphabet_.size();
        while (!stack.empty()) {
            auto& [state, sym] = stack.back();
            if (sym == sigma) {
                stack.pop_back();
                if (!word.empty()) word.pop_back();
                continue;
            }
            auto t = next_[static_cast<std::size_t>(state) * sigma + sym];
            char c = alphabet_[sym];
            ++sym;
            if (t == kNone) continue;
            word.push_back(c);
            if (word.size() == n) {
                f(std::string_view(word));
                word.pop_back();
            } else {
                stack.emplace_back(t, 0);
            }
        }
    }

    /// The distinct length-n factors, sorted.
    std::vector<std::string> factors_of_length(std::size_t n) const {
        require_horizon(n, "factors_of_length");
        if (n > 0 && counts_[n] > enumeration_cap_) throw CapExceeded(counts_[n], enumeration_cap_);
        std::vector<std::string> out;
        out.reserve(n == 0 ? 1 : counts_[n]);
        for_each_factor(n, [&](std::string_view w) { out.emplace_back(w); });
        return out;
    }

    /// p(n; u): number of distinct length-n factors containing u.
    std::uint64_t count_containing(std::size_t n, std::string_view u) const {
        require_horizon(n, "count_containing");
        if (u.size() > n)
            throw RangeError("count_containing: |u|=" + std::to_string(u.size()) + " exceeds n=" + std::to_string(n));
        if (!is_factor(u)) return 0;
        if (counts_[n] > enumeration_cap_) throw CapExceeded(counts_[n], enumeration_cap_);
        std::uint64_t count = 0;
        for_each_factor(n, [&](std::string_view w) { count += contains(w, u) ? 1 : 0; });
        return count;
    }

    /// Number of letters a with u.a a factor of the prefix.
    std::size_t right_extension_count(std::string_view u) const {
        auto s = walk(u);
        if (s == kNone) return 0;
        std::size_t k = 0;
        for (std::size_t a = 0; a < alphabet_.size(); ++a)
            k += next_[static_cast<std::size_t>(s) * alphabet_.size() + a] != kNone ? 1 : 0;
        return k;
    }

    /// Length-n factors with at least two distinct right extensions.
    std::vector<std::string> right_special(std::size_t n) const {
        require_horizon(n + 1, "right_special");
        if (n > 0 && counts_[n] > enumeration_cap_) throw CapExceeded(counts_[n], enumeration_cap_);
        std::vector<std::string> out;
        for_each_factor(n, [&](std::string_view w) {
            if (right_extension_count(w) >= 2) out.emplace_back(w);
        });
        return out;
    }

    /// Sum over states of their length intervals equals the swept per-length total.
    bool check_consistency() const {
        std::uint64_t by_states = 0;
        for (std::size_t v = 1; v < len_.size(); ++v)
            by_states += static_cast<std::uint64_t>(len_[v] - len_[link_[v]]);
        std::uint64_t by_lengths = 0;
        for (std::size_t n = 1; n <= prefix_.size(); ++n) by_lengths += counts_[n];
        return by_states == total_ && by_lengths == total_;
    }

private:
    void require_horizon(std::size_t n, const char* what) const {
        if (n > horizon_.n_max)
            throw RangeError(std::string(what) + ": length " + std::to_string(n) + " exceeds horizon n_max=" +
                             std::to_string(horizon_.n_max));
    }

    std::int32_t new_state(std::int32_t len) {
        len_.push_back(len);
        link_.push_back(kNone);
        next_.resize(next_.size() + alphabet_.size(), kNone);
        return static_cast<std::int32_t>(len_.size() - 1);
    }

    void build() {
        const std::size_t sigma = alphabet_.size();
        len_.reserve(2 * prefix_.size() + 1);
        link_.reserve(2 * prefix_.size() + 1);
        next_.reserve((2 * prefix_.size() + 1) * sigma);
        new_state(0);
        std::int32_t last = 0;
        for (unsigned char ch : prefix_) {
            const std::size_t c = static_cast<std::size_t>(code_[ch]);
            std::int32_t cur = new_state(len_[last] + 1);
            std::int32_t p = last;
            while (p != kNone && next_[p * sigma + c] == kNone) {
                next_[p * sigma + c] = cur;
                p = link_[p];
            }
            if (p == kNone) {
                link_[cur] = 0;
            } else {
                std::int32_t q = next_[p * sigma + c];
                if (len_[p] + 1 == len_[q]) {
                    link_[cur] = q;
                } else {
                    std::int32_t clone = new_state(len_[p] + 1);
                    std::copy_n(next_.begin() + q * sigma, sigma, next_.begin() + clone * sigma);
                    link_[clone] = link_[q];
                    while (p != kNone && next_[p * sigma + c] == q) {
                        next_[p * sigma + c] = clone;
                        p = link_[p];
                    }
                    link_[q] = clone;
                    link_[cur] = clone;
                }
            }
            last = cur;
        }
    }

    void sweep_counts() {
        std::vector<std::int64_t> diff(prefix_.size() + 2, 0);
        total_ = 0;
        for (std::size_t v = 1; v < len_.size(); ++v) {
            auto lo = len_[link_[v]] + 1, hi = len_[v];
            diff[lo] += 1;
            diff[hi + 1] -= 1;
            total_ += static_cast<std::uint64_t>(hi - lo + 1);
        }
        counts_.assign(prefix_.size() + 1, 0);
        std::int64_t run = 0;
        for (std::size_t n = 1; n <= prefix_.size(); ++n) {
            run += diff[n];
            counts_[n] = static_cast<std::uint64_t>(run);
        }
    }

    std::string prefix_;
    std::string alphabet_;
    std::array<std::int16_t, 256> code_{};
    Horizon horizon_;
    std::uint64_t enumeration_cap_;
    std::vector<std::int32_t> len_, link_, next_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

/// Naive reference counters used as independent oracles by the verification suite.
namespace naive {

inline std::vector<std::string> distinct_windows(std::string_view w, std::size_t n) {
    std::vector<std::string> out;
    if (n > w.size()) return out;
    for (std::size_t i = 0; i + n <= w.size(); ++i) out.emplace_back(w.substr(i, n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::uint64_t complexity(std::string_view w, std::size_t n) { return distinct_windows(w, n).size(); }

} // namespace naive

} // namespace spectra
