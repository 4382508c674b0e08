// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Bounded-scale membership tests for the radical of a word: the factors z such that
// every finite family of z-containing factors has only boundedly long concatenations
// inside the factor set.
//
// The primary test is the window form: z is in the radical iff for every n >= |z| there
// is an N(n) such that every factor of length >= N(n) has a length-n window avoiding z.
// On a prefix this is decided per (n, N) pair; a found N(n) is accepted only if the
// first half of the prefix already needs the same N(n).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spectra/factor_index.hpp"
#include "spectra/horizon.hpp"

namespace spectra {

enum class RadicalKind { InRadical, NotInRadical, Inconclusive };

inline std::string_view to_string(RadicalKind k) {
    switch (k) {
    case RadicalKind::InRadical: return "in-radical";
    case RadicalKind::NotInRadical: return "not-in-radical";
    case RadicalKind::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

struct WindowWitness {
    std::size_t n = 0;  // window length
    std::size_t N = 0;  // every factor of length >= N has a z-free length-n window
};

struct RadicalVerdict {
    RadicalKind kind = RadicalKind::Inconclusive;
    std::string z;
    std::string method;                 // "window" or "concatenation"
    std::vector<WindowWitness> table;   // InRadical (window)
    std::size_t failing_n = 0;          // NotInRadical (window)
    std::string evidence;               // NotInRadical: factor, or surviving concatenation
    std::vector<std::string> generators;  // NotInRadical (concatenation)
    std::size_t max_N_tried = 0;
    std::size_t max_assembly_tried = 0;
    std::string note;
};

struct RadicalBudgets {
    std::size_t n_span = 16;               // n ranges over [|z|, |z| + n_span]
    std::optional<std::size_t> N_max;      // default: prefix length / 4
    std::size_t N_max_for(const FactorIndex& index) const { return N_max.value_or(index.size() / 4); }
};

namespace detail {

struct WindowScan {
    std::optional<std::size_t> N;       // smallest N <= N_max that works
    std::optional<std::size_t> bad_at;  // start of a length-N_max factor with no z-free window
};

inline WindowScan scan_windows(std::string_view text, std::string_view z, std::size_t n, std::size_t N_max) {
    const std::size_t L = text.size();
    WindowScan out;
    if (n > L) return out;
    N_max = std::min(N_max, L);
    // occ_prefix[i] = number of occurrences of z starting before i
    std::vector<std::uint32_t> occ_prefix(L + 1, 0);
    for (std::size_t i = 0; i < L; ++i)
        occ_prefix[i + 1] = occ_prefix[i] + (i + z.size() <= L && text.compare(i, z.size(), z) == 0 ? 1 : 0);
    const std::size_t starts = L - n + 1;
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
    std::vector<std::size_t> next_good(starts + 1, inf);
    for (std::size_t i = starts; i-- > 0;) {
        bool good = occ_prefix[i + n - z.size() + 1] == occ_prefix[i];
        next_good[i] = good ? i : next_good[i + 1];
    }
    // need(s): smallest N for which the factor starting at s has a z-free window
    std::vector<std::size_t> pref_max(starts, 0);
    for (std::size_t s = 0; s < starts; ++s) {
        std::size_t need = next_good[s] >= inf ? inf : next_good[s] - s + n;
        pref_max[s] = s == 0 ? need : std::max(pref_max[s - 1], need);
    }
    for (std::size_t N = n; N <= N_max; ++N) {
        if (pref_max[L - N] <= N) {
            out.N = N;
            return out;
        }
    }
    if (N_max >= n) {
        for (std::size_t s = 0; s + N_max <= L; ++s) {
            std::size_t need = next_good[s] >= inf ? inf : next_good[s] - s + n;
            if (need > N_max) {
                out.bad_at = s;
                break;
            }
        }
    }
    return out;
}

} // namespace detail

/// Direct re-check: every length-N factor of `text` has a length-n window avoiding z.
inline bool verify_window_witness(std::string_view text, std::string_view z, std::size_t n, std::size_t N) {
    if (N > text.size() || N < n) return false;
    for (std::size_t s = 0; s + N <= text.size(); ++s) {
        bool found = false;
        for (std::size_t i = s; i + n <= s + N && !found; ++i) found = !contains(text.substr(i, n), z);
        if (!found) return false;
    }
    return true;
}

/// Window test for one window length n.
inline RadicalVerdict radical_window_test(const FactorIndex& index, std::string_view z, std::size_t n,
                                          std::size_t N_max) {
    if (z.empty() || !index.is_factor(z))
        throw PreconditionError("radical_window_test: '" + std::string(z) + "' is not a factor");
    if (n < z.size()) throw RangeError("radical_window_test: n must be >= |z|");
    if (N_max > index.size()) throw RangeError("radical_window_test: N_max exceeds prefix length");
    RadicalVerdict v;
    v.z = std::string(z);
    v.method = "window";
    v.max_N_tried = N_max;
    std::string_view text(index.prefix());
    auto full = detail::scan_windows(text, z, n, N_max);
    if (!full.N) {
        if (full.bad_at) {
            v.kind = RadicalKind::NotInRadical;
            v.failing_n = n;
            v.evidence = std::string(text.substr(*full.bad_at, N_max));
        } else {
            v.kind = RadicalKind::Inconclusive;
            v.note = "N_max smaller than n";
        }
        return v;
    }
    auto half = detail::scan_windows(text.substr(0, text.size() / 2), z, n, N_max);
    if (!half.N || *half.N != *full.N) {
        v.kind = RadicalKind::Inconclusive;
        v.note = "N(" + std::to_string(n) + ") still growing with the prefix";
        return v;
    }
    if (!verify_window_witness(text, z, n, *full.N))
        throw std::logic_error("radical_window_test: witness failed direct re-check");
    v.kind = RadicalKind::InRadical;
    v.table.push_back({n, *full.N});
    return v;
}

/// Window test over every n in [|z|, |z| + n_span].
inline RadicalVerdict classify_radical(const FactorIndex& index, std::string_view z, const RadicalBudgets& budgets = {}) {
    const std::size_t N_max = budgets.N_max_for(index);
    RadicalVerdict out;
    out.z = std::string(z);
    out.method = "window";
    out.max_N_tried = N_max;
    bool inconclusive = false;
    for (std::size_t n = z.size(); n <= z.size() + budgets.n_span; ++n) {
        auto v = radical_window_test(index, z, n, N_max);
        if (v.kind == RadicalKind::NotInRadical) {
            v.table = std::move(out.table);
            return v;
        }
        if (v.kind == RadicalKind::Inconclusive) {
            inconclusive = true;
            out.note = v.note;
            continue;
        }
        out.table.push_back(v.table.front());
    }
    out.kind = inconclusive ? RadicalKind::Inconclusive : RadicalKind::InRadical;
    return out;
}

// ---------------------------------------------------------------------------
// Concatenation test (cross-check against the definition with small generator sets)

struct ConcatBudgets {
    std::size_t set_size = 4;        // largest generator set searched
    std::size_t length_budget = 100; // a surviving concatenation must reach this length
    std::size_t piece_len = 8;       // generators are z-containing factors of length <= max(piece_len, |z|)
    std::size_t max_sets = 20000;    // generator sets examined before giving up
};

namespace detail {

/// Length of a factor formed by concatenating generators, or 0 if every concatenation
/// dies before reaching `budget`.
inline std::size_t surviving_length(const FactorIndex& index, const std::vector<std::string>& gens, std::size_t budget,
                                    std::string* example = nullptr) {
    std::size_t min_len = std::numeric_limits<std::size_t>::max();
    for (const auto& g : gens) min_len = std::min(min_len, g.size());
    std::vector<std::int32_t> layer{index.initial_state()};
    // parent links to rebuild one example concatenation
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> parents{{{0, 0}}};
    for (std::size_t pieces = 1;; ++pieces) {
        std::vector<std::int32_t> next;
        std::vector<std::pair<std::size_t, std::size_t>> next_parent;
        for (std::size_t si = 0; si < layer.size(); ++si)
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                std::int32_t s = layer[si];
                for (char c : gens[gi]) {
                    s = index.step(s, c);
                    if (s == FactorIndex::kNone) break;
                }
                if (s == FactorIndex::kNone) continue;
                if (std::find(next.begin(), next.end(), s) != next.end()) continue;
                next.push_back(s);
                next_parent.emplace_back(si, gi);
            }
        if (next.empty()) return 0;
        parents.push_back(next_parent);
        layer = std::move(next);
        if (pieces * min_len >= budget) {
            if (example) {
                std::vector<std::size_t> seq;
                std::size_t at = 0;
                for (std::size_t lvl = parents.size() - 1; lvl >= 1; --lvl) {
                    seq.push_back(parents[lvl][at].second);
                    at = parents[lvl][at].first;
                }
                example->clear();
                for (auto it = seq.rbegin(); it != seq.rend(); ++it) *example += gens[*it];
            }
            return pieces * min_len;
        }
    }
}

} // namespace detail

/// Searches generator sets of z-containing factors with long concatenations inside the
/// factor set (evidence against membership). When even the set of all short z-containing
/// factors dies before the budget, the result is InRadical, tagged as bounded-scale.
inline RadicalVerdict radical_concat_test(const FactorIndex& index, std::string_view z, const ConcatBudgets& budgets = {}) {
    if (z.empty() || !index.is_factor(z))
        throw PreconditionError("radical_concat_test: '" + std::string(z) + "' is not a factor");
    if (budgets.length_budget > index.size())
        throw RangeError("radical_concat_test: length budget exceeds prefix length");
    RadicalVerdict v;
    v.z = std::string(z);
    v.method = "concatenation";
    v.max_assembly_tried = budgets.length_budget;
    std::vector<std::string> pieces;
    const std::size_t max_piece = std::max(budgets.piece_len, z.size());
    for (std::size_t m = z.size(); m <= max_piece && m <= index.size(); ++m)
        index.for_each_factor(m, [&](std::string_view f) {
            if (contains(f, z)) pieces.emplace_back(f);
        });
    if (detail::surviving_length(index, pieces, budgets.length_budget) == 0) {
        v.kind = RadicalKind::InRadical;
        v.note = "bounded-scale: no concatenation of z-containing factors of length <= " + std::to_string(max_piece) +
                 " reaches length " + std::to_string(budgets.length_budget);
        return v;
    }
    std::size_t examined = 0;
    const std::size_t k_max = std::min(budgets.set_size, pieces.size());
    for (std::size_t k = 1; k <= k_max; ++k) {
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            if (++examined > budgets.max_sets) {
                v.kind = RadicalKind::Inconclusive;
                v.note = "generator-set budget exhausted";
                return v;
            }
            std::vector<std::string> gens;
            for (auto i : pick) gens.push_back(pieces[i]);
            std::string example;
            if (detail::surviving_length(index, gens, budgets.length_budget, &example) > 0) {
                v.kind = RadicalKind::NotInRadical;
                v.generators = std::move(gens);
                v.evidence = std::move(example);
                return v;
            }
            // next combination
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == pieces.size() - k + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    v.kind = RadicalKind::Inconclusive;
    v.note = "long concatenations need more than " + std::to_string(k_max) + " generators";
    return v;
}

// ---------------------------------------------------------------------------

struct RadicalComplement {
    std::size_t n = 0;
    std::vector<std::string> members;     // factors of length <= n not classified in the radical
    std::vector<std::string> radical;     // factors classified in the radical
    std::vector<std::string> unresolved;  // inconclusive classifications (kept in members)
    bool approximate = false;
    bool factor_closed = true;

    bool contains_word(std::string_view w) const { return std::binary_search(members.begin(), members.end(), w); }
};

/// S = factors of length <= n outside the radical, sorted; must be factor-closed.
inline RadicalComplement radical_complement(const FactorIndex& index, std::size_t n, const RadicalBudgets& budgets = {}) {
    RadicalComplement out;
    out.n = n;
    for (std::size_t m = 1; m <= n; ++m)
        for (const auto& f : index.factors_of_length(m)) {
            auto v = classify_radical(index, f, budgets);
            if (v.kind == RadicalKind::InRadical) {
                out.radical.push_back(f);
                continue;
            }
            if (v.kind == RadicalKind::Inconclusive) out.unresolved.push_back(f);
            out.members.push_back(f);
        }
    std::sort(out.members.begin(), out.members.end());
    std::sort(out.radical.begin(), out.radical.end());
    out.approximate = !out.unresolved.empty();
    for (const auto& s : out.members)
        if (s.size() >= 2 && (!out.contains_word(std::string_view(s).substr(1)) ||
                              !out.contains_word(std::string_view(s).substr(0, s.size() - 1))))
            out.factor_closed = false;
    return out;
}

struct IdealCheck {
    bool pass = true;
    std::optional<std::string> offending;
    RadicalKind offending_kind = RadicalKind::InRadical;
    std::size_t checked = 0;
};

/// Every factor of length <= n containing z (itself in the radical) is in the radical.
inline IdealCheck radical_ideal_property_check(const FactorIndex& index, std::string_view z, std::size_t n,
                                               const RadicalBudgets& budgets = {}) {
    if (classify_radical(index, z, budgets).kind != RadicalKind::InRadical)
        throw PreconditionError("radical_ideal_property_check: '" + std::string(z) + "' is not classified in the radical");
    IdealCheck out;
    for (std::size_t m = z.size(); m <= n; ++m)
        for (const auto& f : index.factors_of_length(m)) {
            if (!contains(f, z)) continue;
            ++out.checked;
            auto v = classify_radical(index, f, budgets);
            if (v.kind != RadicalKind::InRadical) {
                out.pass = false;
                out.offending = f;
                out.offending_kind = v.kind;
                return out;
            }
        }
    return out;
}

/// The ideal check for every factor of length <= n classified in the radical; passes
/// vacuously when none is.
inline IdealCheck radical_ideal_property_suite(const FactorIndex& index, std::size_t n, const RadicalBudgets& budgets = {}) {
    IdealCheck out;
    for (std::size_t m = 1; m <= n; ++m)
        for (const auto& z : index.factors_of_length(m)) {
            if (classify_radical(index, z, budgets).kind != RadicalKind::InRadical) continue;
            auto c = radical_ideal_property_check(index, z, n, budgets);
            out.checked += c.checked;
            if (!c.pass) return c;
        }
    return out;
}

} // namespace spectra
