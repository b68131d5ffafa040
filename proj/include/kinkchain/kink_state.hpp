// Copyright 2026 The Kinkchain Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact critical ground state of the domain-wall chain,
//
//   |Psi> = N sum_{s} q^{sum_j j s_j} |s_1 ... s_L>,
//
// valid at h = h_c(Delta) = sqrt(Delta^2-1)/2 with q + 1/q = 2 Delta.

#pragma once

#include <cmath>

#include "kinkchain/basis.hpp"
#include "kinkchain/errors.hpp"
#include "kinkchain/solver.hpp"

namespace kinkchain {

struct KinkParams {
    double delta;  // anisotropy, >= 1
    double q;      // deformation parameter, the root >= 1 of q + 1/q = 2 Delta
    double h_c;    // critical boundary field (q - 1/q)/4
};

inline KinkParams params_from_delta(double delta) {
    if (delta < 1.0)
        throw OutOfKinkRegime("kink state requires delta >= 1");
    const double q = delta + std::sqrt(delta * delta - 1.0);
    return KinkParams{delta, q, (q - 1.0 / q) / 4.0};
}

/// Dense sector amplitudes of the critical state. The exponent sum_j j s_j
/// spans O(L^2) in units of 1/2, so amplitudes are built as
/// exp(e * ln(q)/2 - offset) with the sector maximum as offset, then
/// normalized; q^j never appears unscaled.
inline StateVector build_kink_state(const KinkParams& kp, int length, int two_m) {
    const SectorBasis basis = build_sector(length, two_m);
    if (basis.dim() == 0) throw InvalidSector("empty sector");
    const double half_lnq = 0.5 * std::log(kp.q);

    // twice-exponent 2 sum_j j s_j = 2*sum_{set bits} j - L(L+1)/2
    auto twice_exponent = [&](Config bits) {
        int e = -length * (length + 1) / 2;
        while (bits) {
            e += 2 * (std::countr_zero(bits) + 1);
            bits &= bits - 1;
        }
        return e;
    };

    std::vector<int> expo(basis.dim());
    int emax = std::numeric_limits<int>::min();
    for (Index r = 0; r < basis.dim(); ++r) {
        expo[r] = twice_exponent(basis.unrank(r));
        emax = std::max(emax, expo[r]);
    }
    Eigen::VectorXd amp(basis.dim());
    for (Index r = 0; r < basis.dim(); ++r)
        amp[r] = std::exp((expo[r] - emax) * half_lnq);
    amp.normalize();
    return StateVector{basis, std::move(amp), 0.0, 0.0};
}

}  // namespace kinkchain
