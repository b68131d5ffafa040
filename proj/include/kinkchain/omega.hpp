// Copyright 2026 The Kinkchain Authors
// SPDX-License-Identifier: Apache-2.0
//
// Magnetization-constrained, site-weighted sums
//
//   Omega_i = sum over configurations {s_j} of the participating sites of
//             q^{2 sum_j j s_j},  restricted to (sum_j s_j) + i = m,
//
// evaluated by a site-by-site sweep over the twice-partial-magnetization
// lattice. Every accumulated quantity lives in (mantissa, 2^exponent) form,
// so the sums stay finite for q^j factors spanning thousands of orders of
// magnitude.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "kinkchain/errors.hpp"
#include "kinkchain/kink_state.hpp"

namespace kinkchain {

/// Nonnegative real as mantissa * 2^exp2 with mantissa in [1,2) or exactly 0.
struct ScaledValue {
    double mantissa = 0.0;
    std::int64_t exp2 = 0;

    static ScaledValue zero() { return {}; }

    static ScaledValue from(double d) {
        if (d == 0.0) return {};
        int e;
        const double f = std::frexp(d, &e);  // f in [0.5, 1)
        return {2.0 * f, static_cast<std::int64_t>(e) - 1};
    }

    bool is_zero() const { return mantissa == 0.0; }

    double to_double() const {
        if (is_zero()) return 0.0;
        return std::ldexp(mantissa, static_cast<int>(exp2));
    }

    friend ScaledValue operator*(ScaledValue a, ScaledValue b) {
        if (a.is_zero() || b.is_zero()) return {};
        ScaledValue r{a.mantissa * b.mantissa, a.exp2 + b.exp2};  // mantissa in [1,4)
        if (r.mantissa >= 2.0) {
            r.mantissa *= 0.5;
            ++r.exp2;
        }
        return r;
    }

    friend ScaledValue operator+(ScaledValue a, ScaledValue b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.exp2 < b.exp2) std::swap(a, b);
        const std::int64_t shift = b.exp2 - a.exp2;
        if (shift < -1074) return a;  // b is below one ulp of a
        ScaledValue r{a.mantissa + std::ldexp(b.mantissa, static_cast<int>(shift)), a.exp2};
        while (r.mantissa >= 2.0) {
            r.mantissa *= 0.5;
            ++r.exp2;
        }
        return r;
    }
};

inline ScaledValue sqrt(ScaledValue a) {
    if (a.is_zero()) return {};
    if (a.exp2 & 1) {
        a.mantissa *= 2.0;
        --a.exp2;
    }
    ScaledValue r{std::sqrt(a.mantissa), a.exp2 / 2};  // mantissa in [1,2)
    return r;
}

/// a / b as a plain double; caller guarantees the ratio is representable.
inline double ratio(ScaledValue a, ScaledValue b) {
    if (a.is_zero()) return 0.0;
    return std::ldexp(a.mantissa / b.mantissa, static_cast<int>(a.exp2 - b.exp2));
}

/// q^n for integer n of either sign, by binary exponentiation.
inline ScaledValue scaled_pow(double q, std::int64_t n) {
    ScaledValue base = ScaledValue::from(n >= 0 ? q : 1.0 / q);
    std::uint64_t e = static_cast<std::uint64_t>(n >= 0 ? n : -n);
    ScaledValue r = ScaledValue::from(1.0);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

/// Distribution of sum q^{2 sum j s_j} over the twice-partial-magnetization
/// values reachable by a set of sites. cells[k] holds the sum restricted to
/// 2 sum s_j = min_two_sz + 2k.
struct OmegaTable {
    int min_two_sz = 0;
    std::vector<ScaledValue> cells;

    static OmegaTable empty_set() { return {0, {ScaledValue::from(1.0)}}; }

    ScaledValue at_two_sz(int two_sz) const {
        const int k = (two_sz - min_two_sz) / 2;
        if (two_sz < min_two_sz || ((two_sz - min_two_sz) & 1) || k >= static_cast<int>(cells.size()))
            return ScaledValue::zero();
        return cells[static_cast<std::size_t>(k)];
    }

    /// Include one more site of weight j: each cell splits into s_j = +-1/2
    /// branches carrying q^{+-j}.
    void add_site(double q, int site_weight) {
        const ScaledValue up = scaled_pow(q, site_weight);
        const ScaledValue down = scaled_pow(q, -site_weight);
        std::vector<ScaledValue> next(cells.size() + 1);
        for (std::size_t k = 0; k < cells.size(); ++k) {
            next[k] = next[k] + cells[k] * down;
            next[k + 1] = next[k + 1] + cells[k] * up;
        }
        min_two_sz -= 1;
        cells = std::move(next);
    }
};

/// sum_t a(t) * b(two_target - t) over twice-magnetization splits.
inline ScaledValue convolve_at(const OmegaTable& a, const OmegaTable& b, int two_target) {
    ScaledValue acc;
    for (std::size_t k = 0; k < a.cells.size(); ++k) {
        const int t = a.min_two_sz + 2 * static_cast<int>(k);
        acc = acc + a.cells[k] * b.at_two_sz(two_target - t);
    }
    return acc;
}

namespace detail {

inline OmegaTable sweep_sites(double q, int length, int skip_a, int skip_b) {
    OmegaTable t = OmegaTable::empty_set();
    for (int j = 1; j <= length; ++j)
        if (j != skip_a && j != skip_b) t.add_site(q, j);
    return t;
}

inline void check_sector(int length, int two_m) {
    if (std::abs(two_m) > length || ((two_m + length) % 2) != 0)
        throw InvalidSector("invalid sector two_m=" + std::to_string(two_m));
}

}  // namespace detail

struct OmegaPair {
    ScaledValue omega_plus;   // i = +1 (both held spins up)
    ScaledValue omega_zero;   // i = 0
    ScaledValue omega_minus;  // i = -1
};

/// The pair sums over the L-2 sites excluding A and B, constrained to
/// (sum s_j) + i = m for i = +1, 0, -1.
inline OmegaPair omega_pair(const KinkParams& kp, int length, int site_a, int site_b,
                            int two_m) {
    if (site_a < 1 || site_b > length || site_a >= site_b)
        throw InvalidPair("omega_pair: need 1 <= A < B <= L");
    detail::check_sector(length, two_m);
    const OmegaTable t = detail::sweep_sites(kp.q, length, site_a, site_b);
    return OmegaPair{t.at_two_sz(two_m - 2), t.at_two_sz(two_m), t.at_two_sz(two_m + 2)};
}

struct OmegaSingle {
    ScaledValue omega_up;    // i = +1/2 (held spin up)
    ScaledValue omega_down;  // i = -1/2
};

inline OmegaSingle omega_single(const KinkParams& kp, int length, int site_a, int two_m) {
    if (site_a < 1 || site_a > length)
        throw InvalidPair("omega_single: site out of range");
    detail::check_sector(length, two_m);
    const OmegaTable t = detail::sweep_sites(kp.q, length, site_a, 0);
    return OmegaSingle{t.at_two_sz(two_m - 1), t.at_two_sz(two_m + 1)};
}

/// N^{-2} = sum over the full sector of q^{2 sum j s_j}.
inline ScaledValue normalization(const KinkParams& kp, int length, int two_m) {
    detail::check_sector(length, two_m);
    const OmegaTable t = detail::sweep_sites(kp.q, length, 0, 0);
    ScaledValue n = t.at_two_sz(two_m);
    if (n.is_zero()) throw InvalidSector("empty sector");
    return n;
}

}  // namespace kinkchain
