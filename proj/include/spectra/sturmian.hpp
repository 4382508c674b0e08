// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Mechanical (Sturmian) words from a truncated continued-fraction expansion of the
// slope, computed with exact rational arithmetic.
//
// Slope convention: the terms d_1, d_2, ... are the directive sequence of the
// standard words s_k = s_{k-1}^{d_k} s_{k-2} (s_{-1} = "1", s_0 = "0"), so the slope
// is alpha = [0; 1 + d_1, d_2, d_3, ...]. With every d_k = 1 the characteristic word
// is the Fibonacci word 0100101001001...
//
// A finite list of terms pins alpha only to a cylinder interval. A letter is emitted
// only when both floors in floor((n+1)alpha + rho) - floor(n alpha + rho) are constant
// on the whole (open) cylinder, so every emitted letter is correct for every
// irrational slope that continues the given terms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spectra/common.hpp"

namespace spectra {

/// A rational intercept num/den in [0, 1).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    friend bool operator==(const Rational&, const Rational&) = default;
};

class SturmianSlope {
public:
    using i128 = __int128;

    /// Largest convergent denominator kept; later terms are ignored.
    static constexpr std::int64_t kMaxDenominator = std::int64_t{1} << 40;
    static constexpr std::uint64_t kMaxPosition = std::uint64_t{1} << 32;
    static constexpr std::int64_t kMaxInterceptDen = std::int64_t{1} << 31;

    /// `intercept` empty means the characteristic word (rho = alpha).
    SturmianSlope(const std::vector<std::uint64_t>& cf_terms, std::optional<Rational> intercept)
        : intercept_(intercept) {
        if (cf_terms.empty()) throw SpecError("sturmian: cf_terms must be nonempty");
        for (auto t : cf_terms)
            if (t < 1) throw SpecError("sturmian: every cf term must be >= 1");
        if (intercept_) {
            if (intercept_->den <= 0 || intercept_->den > kMaxInterceptDen || intercept_->num < 0 ||
                intercept_->num >= intercept_->den)
                throw SpecError("sturmian: intercept must be a rational in [0,1) with denominator in [1, 2^31]");
        }
        // Convergents of [0; b_1, ..., b_m] with b_1 = 1 + d_1, b_k = d_k.
        i128 p_prev = 1, q_prev = 0, p = 0, q = 1;
        for (std::size_t k = 0; k < cf_terms.size(); ++k) {
            i128 b = static_cast<i128>(cf_terms[k]) + (k == 0 ? 1 : 0);
            i128 p_next = b * p + p_prev;
            i128 q_next = b * q + q_prev;
            if (q_next > kMaxDenominator) break;
            p_prev = p; q_prev = q; p = p_next; q = q_next;
            ++terms_used_;
        }
        if (terms_used_ == 0) throw SpecError("sturmian: first cf term too large");
        p_ = p; q_ = q; p_prev_ = p_prev; q_prev_ = q_prev;
        // Interior point of the cylinder: continuation x = 2.
        mid_num_ = 2 * p_ + p_prev_;
        mid_den_ = 2 * q_ + q_prev_;
    }

    std::size_t terms_used() const { return terms_used_; }

    /// Letter at position n, or nullopt when the truncated slope does not determine it.
    std::optional<int> letter(std::uint64_t n) const {
        if (n >= kMaxPosition) return std::nullopt;
        i128 k = static_cast<i128>(n);
        if (intercept_) {
            if (!floor_determined(k + 1) || !floor_determined(k)) return std::nullopt;
            return static_cast<int>(floor_at_mid(k + 1) - floor_at_mid(k));
        }
        if (!floor_determined(k + 2) || !floor_determined(k + 1)) return std::nullopt;
        return static_cast<int>(floor_at_mid(k + 2) - floor_at_mid(k + 1));
    }

    /// Letter at position n; throws SpecError with a required-terms diagnostic.
    int letter_or_throw(std::uint64_t n) const {
        if (auto l = letter(n)) return *l;
        throw SpecError("sturmian: position " + std::to_string(n) + " is not determined by the first " +
                        std::to_string(terms_used_) +
                        " cf terms (slope must be irrational at requested precision); need at least " +
                        std::to_string(required_terms_estimate(n)) + " terms");
    }

    /// Lower bound on the number of terms needed for positions < n+1, assuming every
    /// further term is 1 (the slowest denominator growth).
    std::size_t required_terms_estimate(std::uint64_t n) const {
        i128 q = q_, qp = q_prev_;
        std::size_t m = terms_used_;
        while (q + qp < static_cast<i128>(n) + 3) {
            i128 next = q + qp;
            qp = q; q = next; ++m;
        }
        return m + 1;
    }

private:
    static i128 floor_div(i128 a, i128 b) {
        i128 d = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
        return d;
    }

    // value k*num/den + rho as (numerator, denominator)
    std::pair<i128, i128> affine(i128 k, i128 num, i128 den) const {
        if (!intercept_) return {k * num, den};
        i128 r = intercept_->num, s = intercept_->den;
        return {k * num * s + r * den, den * s};
    }

    bool floor_determined(i128 k) const {
        auto [an, ad] = affine(k, p_, q_);
        auto [bn, bd] = affine(k, p_ + p_prev_, q_ + q_prev_);
        // k >= 0 preserves the order of the two cylinder endpoints
        bool a_low = p_ * (q_ + q_prev_) <= (p_ + p_prev_) * q_;
        i128 ln = a_low ? an : bn, ld = a_low ? ad : bd;
        i128 hn = a_low ? bn : an, hd = a_low ? bd : ad;
        i128 next_int = floor_div(ln, ld) + 1;
        return next_int * hd >= hn;
    }

    i128 floor_at_mid(i128 k) const {
        auto [n, d] = affine(k, mid_num_, mid_den_);
        return floor_div(n, d);
    }

    std::optional<Rational> intercept_;
    std::size_t terms_used_ = 0;
    i128 p_ = 0, q_ = 1, p_prev_ = 1, q_prev_ = 0;
    i128 mid_num_ = 0, mid_den_ = 1;
};

/// Letter at position n of the mechanical word with the given slope terms and intercept.
inline int sturmian_letter(const std::vector<std::uint64_t>& cf_terms, std::optional<Rational> intercept,
                           std::uint64_t n) {
    return SturmianSlope(cf_terms, intercept).letter_or_throw(n);
}

} // namespace spectra
