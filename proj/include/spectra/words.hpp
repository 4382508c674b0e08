// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace spectra {

/// True iff u is not a proper power v^k, k >= 2.
inline bool is_primitive(std::string_view u) {
    if (u.empty()) return false;
    std::string doubled(u);
    doubled += u;
    return doubled.find(u, 1) == u.size();
}

/// Shortest v with u = v^k.
inline std::string primitive_root(std::string_view u) {
    if (u.empty()) return {};
    std::string doubled(u);
    doubled += u;
    return std::string(u.substr(0, doubled.find(u, 1)));
}

/// Start index of the lexicographically least rotation (Booth's algorithm).
inline std::size_t least_rotation_start(std::string_view u) {
    const std::size_t n = u.size();
    if (n == 0) return 0;
    std::string s(u);
    s += u;
    std::vector<long> fail(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        char sj = s[j];
        long i = fail[j - k - 1];
        while (i != -1 && sj != s[k + static_cast<std::size_t>(i) + 1]) {
            if (sj < s[k + static_cast<std::size_t>(i) + 1]) k = j - static_cast<std::size_t>(i) - 1;
            i = fail[static_cast<std::size_t>(i)];
        }
        if (sj != s[k + static_cast<std::size_t>(i) + 1]) { // i == -1
            if (sj < s[k]) k = j;
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    return k % n;
}

inline std::string least_rotation(std::string_view u) {
    auto k = least_rotation_start(u);
    return std::string(u.substr(k)) + std::string(u.substr(0, k));
}

/// Canonical representative of the class of u^omega: least rotation of the primitive root.
inline std::string canonical_period(std::string_view u) { return least_rotation(primitive_root(u)); }

inline std::string repeat(std::string_view u, std::size_t k) {
    std::string out;
    out.reserve(u.size() * k);
    for (std::size_t i = 0; i < k; ++i) out += u;
    return out;
}

} // namespace spectra
