// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spectra {

/// Rejected word specification (bad morphism, empty period, short explicit prefix...).
struct SpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A query whose arguments fall outside the range the index can answer soundly.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Enumeration refused because the result would exceed the configured cap.
struct CapExceeded : RangeError {
    CapExceeded(std::uint64_t count, std::uint64_t cap)
        : RangeError("enumeration cap exceeded: " + std::to_string(count) +
                     " words requested, cap is " + std::to_string(cap)),
          count(count), cap(cap) {}
    std::uint64_t count;
    std::uint64_t cap;
};

/// An input violates a check's precondition (e.g. non-recurrent root).
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

/// How much a finite-prefix statement can be trusted for the infinite word.
enum class Guarantee { Exact, Stabilized, Approximate };

inline std::string_view to_string(Guarantee g) {
    switch (g) {
    case Guarantee::Exact: return "exact";
    case Guarantee::Stabilized: return "stabilized";
    case Guarantee::Approximate: return "approximate";
    }
    return "approximate";
}

inline Guarantee weaker(Guarantee a, Guarantee b) { return a > b ? a : b; }

/// Soundness horizon: factor statements of length <= n_max made from a prefix of
/// length prefix_len hold for the infinite word at the given guarantee level.
struct Horizon {
    std::size_t n_max = 0;
    Guarantee guarantee = Guarantee::Approximate;
    std::size_t prefix_len = 0;

    friend bool operator==(const Horizon&, const Horizon&) = default;
};

inline bool contains(std::string_view haystack, std::string_view needle) {
    return haystack.find(needle) != std::string_view::npos;
}

} // namespace spectra
