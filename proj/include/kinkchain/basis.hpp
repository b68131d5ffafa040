// Copyright 2026 The Kinkchain Authors
// SPDX-License-Identifier: Apache-2.0
//
// Spin-1/2 configurations as bitstrings and magnetization-sector bases.
//
// Convention used throughout the project: chain site j (1..L) maps to bit
// j-1, and a set bit means s_j = +1/2. Magnetization is stored as the
// integer 2m so that odd L needs no fractions.

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "kinkchain/errors.hpp"

namespace kinkchain {

using Config = std::uint64_t;
using Index = std::int64_t;

inline constexpr int kMaxSites = 32;

/// C(n, k) for n <= 64; 0 outside the triangle.
inline std::uint64_t binomial(int n, int k) {
    static const auto table = [] {
        std::vector<std::vector<std::uint64_t>> t(65);
        for (int i = 0; i <= 64; ++i) {
            t[i].assign(static_cast<std::size_t>(i) + 1, 1);
            for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
        }
        return t;
    }();
    if (k < 0 || n < 0 || k > n) return 0;
    return table[n][k];
}

struct SpinConfig {
    Config bits = 0;
    int length = 0;

    /// 2m = popcount - (L - popcount).
    int two_m() const { return 2 * std::popcount(bits) - length; }
    bool spin_up(int site) const { return (bits >> (site - 1)) & 1u; }
    /// s_j in units of 1/2, i.e. +1 or -1.
    int twice_spin(int site) const { return spin_up(site) ? 1 : -1; }
};

/// All L-bit configurations with fixed total magnetization, enumerated in
/// increasing integer order. Ranking is combinatorial-number-system
/// arithmetic, O(L) with no lookup tables beyond the binomial triangle.
class SectorBasis {
public:
    SectorBasis(int length, int two_m) : length_(length), two_m_(two_m) {
        if (length < 2 || length > kMaxSites)
            throw InvalidSector("site count out of range: " + std::to_string(length));
        if (std::abs(two_m) > length || ((two_m + length) % 2) != 0)
            throw InvalidSector("invalid sector two_m=" + std::to_string(two_m) +
                                " for L=" + std::to_string(length));
        n_up_ = (length + two_m) / 2;
        dim_ = static_cast<Index>(binomial(length, n_up_));
    }

    int length() const { return length_; }
    int two_m() const { return two_m_; }
    int n_up() const { return n_up_; }
    Index dim() const { return dim_; }

    bool contains(Config bits) const {
        return bits < (Config{1} << length_) && std::popcount(bits) == n_up_;
    }

    Index rank(Config bits) const {
        if (!contains(bits))
            throw NotInSector("configuration not in sector");
        Index r = 0;
        int seen = 0;
        while (bits) {
            const int p = std::countr_zero(bits);
            r += static_cast<Index>(binomial(p, ++seen));
            bits &= bits - 1;
        }
        return r;
    }

    Config unrank(Index r) const {
        if (r < 0 || r >= dim_)
            throw NotInSector("rank out of range");
        Config bits = 0;
        Index rem = r;
        for (int i = n_up_; i >= 1; --i) {
            // largest p with C(p, i) <= rem
            int p = i - 1;
            while (binomial(p + 1, i) <= static_cast<std::uint64_t>(rem)) ++p;
            rem -= static_cast<Index>(binomial(p, i));
            bits |= Config{1} << p;
        }
        return bits;
    }

    SpinConfig config(Index r) const { return SpinConfig{unrank(r), length_}; }

private:
    int length_;
    int two_m_;
    int n_up_;
    Index dim_;
};

inline SectorBasis build_sector(int length, int two_m) {
    return SectorBasis(length, two_m);
}

}  // namespace kinkchain
