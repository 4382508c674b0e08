// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Generative descriptions of right-infinite words and their finite prefixes.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "spectra/common.hpp"
#include "spectra/sturmian.hpp"

namespace spectra {

struct PeriodicSpec {
    std::string period;
    friend bool operator==(const PeriodicSpec&, const PeriodicSpec&) = default;
};

/// Fixed point of a non-erasing morphism prolongable on `seed`, optionally followed by a
/// letter-to-letter coding. An empty coding is the identity.
struct MorphicSpec {
    std::map<char, std::string> rules;
    std::map<char, char> coding;
    char seed = 0;
    friend bool operator==(const MorphicSpec&, const MorphicSpec&) = default;
};

/// `intercept` empty means the characteristic word.
struct SturmianSpec {
    std::vector<std::uint64_t> cf_terms;
    std::optional<Rational> intercept;
    friend bool operator==(const SturmianSpec&, const SturmianSpec&) = default;
};

enum class BlockBuilder { RadicalExample, RunDoubling, SparseOnes };

struct BlocksSpec {
    BlockBuilder builder = BlockBuilder::RadicalExample;
    std::vector<std::uint64_t> params;
    friend bool operator==(const BlocksSpec&, const BlocksSpec&) = default;
};

struct PrefixSpec {
    std::string symbols;
    friend bool operator==(const PrefixSpec&, const PrefixSpec&) = default;
};

struct WordSpec {
    std::variant<PeriodicSpec, MorphicSpec, SturmianSpec, BlocksSpec, PrefixSpec> kind;
    friend bool operator==(const WordSpec&, const WordSpec&) = default;

    template <class T> const T* as() const { return std::get_if<T>(&kind); }
};

// ---------------------------------------------------------------------------
// Block programs: stage k = 0, 1, 2, ... emits one run per rule, in order.

struct RunRule {
    enum class Growth { Constant, Geometric, Linear };
    char letter = 0;
    Growth growth = Growth::Constant;
    std::uint64_t a = 1; // Constant: a; Geometric: a * b^k; Linear: a * k + b
    std::uint64_t b = 0;

    /// Saturates at `cap` so that huge stages never overflow.
    std::uint64_t length(std::uint64_t k, std::uint64_t cap) const {
        switch (growth) {
        case Growth::Constant: return std::min(a, cap);
        case Growth::Linear: {
            if (a != 0 && k > (cap - std::min(b, cap)) / a) return cap;
            return std::min(a * k + b, cap);
        }
        case Growth::Geometric: {
            std::uint64_t v = a;
            for (std::uint64_t i = 0; i < k; ++i) {
                if (v > cap / b) return cap;
                v *= b;
            }
            return std::min(v, cap);
        }
        }
        return 0;
    }

    bool grows() const {
        return (growth == Growth::Geometric && b >= 2) || (growth == Growth::Linear && a >= 1);
    }
};

inline std::string_view to_string(BlockBuilder b) {
    switch (b) {
    case BlockBuilder::RadicalExample: return "radical-example";
    case BlockBuilder::RunDoubling: return "run-doubling";
    case BlockBuilder::SparseOnes: return "sparse-ones";
    }
    return "";
}

inline std::optional<BlockBuilder> block_builder_from_string(std::string_view s) {
    for (auto b : {BlockBuilder::RadicalExample, BlockBuilder::RunDoubling, BlockBuilder::SparseOnes})
        if (to_string(b) == s) return b;
    return std::nullopt;
}

/// Run-length program of a block builder.
///   radical-example [base=2]:  x^(base^k) y          -> x y x^2 y x^4 y ...
///   run-doubling    [base=2]:  0^(base^k) 1^(base^k) -> 0 1 0^2 1^2 0^4 1^4 ...
///   sparse-ones     [step=1]:  1 0^(step*k + 1)      -> 1 0 1 0^2 1 0^3 ...
inline std::vector<RunRule> block_program(const BlocksSpec& spec) {
    using G = RunRule::Growth;
    auto param = [&](std::size_t i, std::uint64_t dflt) { return i < spec.params.size() ? spec.params[i] : dflt; };
    std::size_t max_params = 1;
    if (spec.params.size() > max_params)
        throw SpecError("blocks: builder '" + std::string(to_string(spec.builder)) + "' takes at most 1 parameter");
    switch (spec.builder) {
    case BlockBuilder::RadicalExample: {
        auto base = param(0, 2);
        if (base < 2) throw SpecError("blocks: radical-example base must be >= 2");
        return {{'x', G::Geometric, 1, base}, {'y', G::Constant, 1, 0}};
    }
    case BlockBuilder::RunDoubling: {
        auto base = param(0, 2);
        if (base < 2) throw SpecError("blocks: run-doubling base must be >= 2");
        return {{'0', G::Geometric, 1, base}, {'1', G::Geometric, 1, base}};
    }
    case BlockBuilder::SparseOnes: {
        auto step = param(0, 1);
        if (step < 1) throw SpecError("blocks: sparse-ones step must be >= 1");
        return {{'1', G::Constant, 1, 0}, {'0', G::Linear, step, 1}};
    }
    }
    throw SpecError("blocks: unknown builder");
}

// ---------------------------------------------------------------------------

namespace detail {

inline void check_printable(char c, const char* what) {
    if (!std::isgraph(static_cast<unsigned char>(c)))
        throw SpecError(std::string(what) + ": symbols must be printable non-space characters");
}

inline void validate_morphic(const MorphicSpec& m) {
    if (m.rules.empty()) throw SpecError("morphic: no rules");
    for (const auto& [from, image] : m.rules) {
        check_printable(from, "morphic");
        if (image.empty()) throw SpecError(std::string("morphic: erasing rule for '") + from + "'");
        for (char c : image)
            if (!m.rules.count(c))
                throw SpecError(std::string("morphic: letter '") + c + "' has no rule");
    }
    auto it = m.rules.find(m.seed);
    if (it == m.rules.end()) throw SpecError(std::string("morphic: seed '") + m.seed + "' has no rule");
    if (it->second.front() != m.seed || it->second.size() < 2)
        throw SpecError(std::string("morphic: not prolongable on seed '") + m.seed + "'");
    if (!m.coding.empty()) {
        for (const auto& [from, to] : m.coding) {
            check_printable(to, "morphic coding");
            if (!m.rules.count(from)) throw SpecError(std::string("morphic: coding maps unknown letter '") + from + "'");
        }
        for (const auto& [from, image] : m.rules)
            if (!m.coding.count(from)) throw SpecError(std::string("morphic: coding misses letter '") + from + "'");
    }
}

} // namespace detail

/// Throws SpecError when the spec violates its family's invariants.
inline void validate(const WordSpec& spec) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PeriodicSpec>) {
                if (s.period.empty()) throw SpecError("periodic: empty period");
                for (char c : s.period) detail::check_printable(c, "periodic");
            } else if constexpr (std::is_same_v<T, MorphicSpec>) {
                detail::validate_morphic(s);
            } else if constexpr (std::is_same_v<T, SturmianSpec>) {
                SturmianSlope(s.cf_terms, s.intercept);
            } else if constexpr (std::is_same_v<T, BlocksSpec>) {
                block_program(s);
            } else {
                if (s.symbols.empty()) throw SpecError("prefix: empty symbols");
                for (char c : s.symbols) detail::check_printable(c, "prefix");
            }
        },
        spec.kind);
}

/// Letters the word may emit, sorted.
inline std::string alphabet_of(const WordSpec& spec) {
    std::set<char> letters;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PeriodicSpec>) {
                letters.insert(s.period.begin(), s.period.end());
            } else if constexpr (std::is_same_v<T, MorphicSpec>) {
                for (const auto& [from, image] : s.rules)
                    letters.insert(s.coding.empty() ? from : s.coding.at(from));
            } else if constexpr (std::is_same_v<T, SturmianSpec>) {
                letters = {'0', '1'};
            } else if constexpr (std::is_same_v<T, BlocksSpec>) {
                for (const auto& r : block_program(s)) letters.insert(r.letter);
            } else {
                letters.insert(s.symbols.begin(), s.symbols.end());
            }
        },
        spec.kind);
    return {letters.begin(), letters.end()};
}

/// True when the spec is a truncation of an infinite description (Sturmian slopes).
inline bool is_truncated(const WordSpec& spec) { return spec.as<SturmianSpec>() != nullptr; }

/// First `length` symbols of the infinite word described by `spec`.
inline std::string generate_prefix(const WordSpec& spec, std::size_t length) {
    if (length == 0) throw RangeError("generate_prefix: length must be >= 1");
    validate(spec);
    std::string out;
    out.reserve(length);
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PeriodicSpec>) {
                for (std::size_t i = 0; i < length; ++i) out.push_back(s.period[i % s.period.size()]);
            } else if constexpr (std::is_same_v<T, MorphicSpec>) {
                // sigma(prefix) is a prefix of sigma(w) = w, so truncating each round is exact.
                std::string w(1, s.seed);
                while (w.size() < length) {
                    std::string next;
                    next.reserve(std::min(length, w.size() * 4));
                    for (char c : w) {
                        next += s.rules.at(c);
                        if (next.size() >= length) break;
                    }
                    next.resize(std::min(next.size(), length));
                    w = std::move(next);
                }
                if (!s.coding.empty())
                    for (char& c : w) c = s.coding.at(c);
                out = std::move(w);
            } else if constexpr (std::is_same_v<T, SturmianSpec>) {
                SturmianSlope slope(s.cf_terms, s.intercept);
                for (std::size_t i = 0; i < length; ++i)
                    out.push_back(static_cast<char>('0' + slope.letter_or_throw(i)));
            } else if constexpr (std::is_same_v<T, BlocksSpec>) {
                auto program = block_program(s);
                for (std::uint64_t k = 0; out.size() < length; ++k)
                    for (const auto& rule : program) {
                        auto run = rule.length(k, length - out.size());
                        out.append(run, rule.letter);
                        if (out.size() >= length) break;
                    }
            } else {
                if (s.symbols.size() < length)
                    throw SpecError("prefix: explicit prefix has " + std::to_string(s.symbols.size()) +
                                    " symbols, " + std::to_string(length) + " requested");
                out = s.symbols.substr(0, length);
            }
        },
        spec.kind);
    return out;
}

/// Short human-readable description used in reports.
inline std::string describe(const WordSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PeriodicSpec>) {
                return "periodic(" + s.period + ")";
            } else if constexpr (std::is_same_v<T, MorphicSpec>) {
                std::string r = "morphic(";
                bool first = true;
                for (const auto& [from, image] : s.rules) {
                    if (!first) r += ", ";
                    r += std::string(1, from) + "->" + image;
                    first = false;
                }
                return r + "; seed " + std::string(1, s.seed) + ")";
            } else if constexpr (std::is_same_v<T, SturmianSpec>) {
                return "sturmian(" + std::to_string(s.cf_terms.size()) + " cf terms, truncated)";
            } else if constexpr (std::is_same_v<T, BlocksSpec>) {
                return "blocks(" + std::string(to_string(s.builder)) + ")";
            } else {
                return "prefix(" + std::to_string(s.symbols.size()) + " symbols)";
            }
        },
        spec.kind);
}

} // namespace spectra
