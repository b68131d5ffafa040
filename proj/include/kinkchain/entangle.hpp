// Copyright 2026 The Kinkchain Authors
// SPDX-License-Identifier: Apache-2.0
//
// Entanglement measures: two-site and one-site reduced density matrices,
// Wootters concurrence (closed X-state form plus the general four-lambda
// route), Meyer-Wallach global entanglement in purity and wedge-product
// forms, and the analytic kink-state variants driven by the Omega sums.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>

#include "kinkchain/basis.hpp"
#include "kinkchain/errors.hpp"
#include "kinkchain/omega.hpp"
#include "kinkchain/solver.hpp"

namespace kinkchain {

inline constexpr double kPsdTol = 1e-8;

/// Two-site reduced density matrix in the basis {|++>, |+->, |-+>, |-->}.
struct PairDensityMatrix {
    Eigen::Matrix4d entries = Eigen::Matrix4d::Zero();
    int site_a = 0;
    int site_b = 0;
};

struct SiteDensityMatrix {
    double p_up = 0.0;
    double p_down = 0.0;
    int site = 0;
};

namespace detail {

inline void validate_density_matrix(const Eigen::Matrix4d& rho) {
    if (std::abs(rho.trace() - 1.0) > kPsdTol)
        throw InvalidDensityMatrix("density matrix trace differs from 1");
    if ((rho - rho.transpose()).cwiseAbs().maxCoeff() > kPsdTol)
        throw InvalidDensityMatrix("density matrix not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol)
        throw InvalidDensityMatrix("density matrix not positive semidefinite");
}

}  // namespace detail

inline PairDensityMatrix pair_rdm(const StateVector& state, int site_a, int site_b) {
    const SectorBasis& basis = state.basis;
    const int L = basis.length();
    if (site_a < 1 || site_b > L || site_a >= site_b)
        throw InvalidPair("pair_rdm: need 1 <= A < B <= L");
    const Config mask_a = Config{1} << (site_a - 1);
    const Config mask_b = Config{1} << (site_b - 1);

    PairDensityMatrix rho;
    rho.site_a = site_a;
    rho.site_b = site_b;
    double z = 0.0;
    for (Index r = 0; r < basis.dim(); ++r) {
        const Config bits = basis.unrank(r);
        const double w = state.amplitudes[r] * state.amplitudes[r];
        const bool up_a = bits & mask_a;
        const bool up_b = bits & mask_b;
        const int row = up_a ? (up_b ? 0 : 1) : (up_b ? 2 : 3);
        rho.entries(row, row) += w;
        // |+-> component pairs with the same rest-configuration in |-+>
        if (up_a && !up_b)
            z += state.amplitudes[r] * state.amplitudes[basis.rank(bits ^ (mask_a | mask_b))];
    }
    rho.entries(1, 2) = rho.entries(2, 1) = z;
    return rho;
}

/// Closed-form concurrence for X-shaped density matrices. Exact for every
/// state of this model (magnetization conservation kills the other entries).
inline double concurrence(const PairDensityMatrix& rho) {
    detail::validate_density_matrix(rho.entries);
    const auto& r = rho.entries;
    const double inner = std::abs(r(1, 2)) - std::sqrt(std::max(r(0, 0) * r(3, 3), 0.0));
    const double outer = std::abs(r(0, 3)) - std::sqrt(std::max(r(1, 1) * r(2, 2), 0.0));
    double c = 2.0 * std::max(inner, outer);
    if (c < 1e-12) c = 0.0;
    return std::min(c, 1.0);
}

/// General four-lambda Wootters route, kept as the oracle: lambda_i are the
/// decreasing square roots of the eigenvalues of rho (sy x sy) rho^* (sy x sy),
/// evaluated through the symmetric product sqrt(rho) rho~ sqrt(rho).
inline double concurrence_wootters(const Eigen::Matrix4cd& rho) {
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1;
    yy(1, 2) = 1;
    yy(2, 1) = 1;
    yy(3, 0) = -1;
    const Eigen::Matrix4cd rho_tilde = yy * rho.conjugate() * yy;

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho);
    Eigen::Vector4d ev = es.eigenvalues().cwiseMax(0.0);
    const Eigen::Matrix4cd sqrt_rho =
        es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es2(sqrt_rho * rho_tilde * sqrt_rho);
    Eigen::Vector4d lam = es2.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    std::sort(lam.data(), lam.data() + 4, std::greater<double>());
    return std::max(lam[0] - lam[1] - lam[2] - lam[3], 0.0);
}

inline PairDensityMatrix kink_pair_rdm(const KinkParams& kp, int length, int site_a,
                                       int site_b, int two_m) {
    const OmegaPair om = omega_pair(kp, length, site_a, site_b, two_m);
    const ScaledValue norm = normalization(kp, length, two_m);
    PairDensityMatrix rho;
    rho.site_a = site_a;
    rho.site_b = site_b;
    rho.entries(0, 0) = ratio(scaled_pow(kp.q, site_a + site_b) * om.omega_plus, norm);
    rho.entries(1, 1) = ratio(scaled_pow(kp.q, site_a - site_b) * om.omega_zero, norm);
    rho.entries(2, 2) = ratio(scaled_pow(kp.q, site_b - site_a) * om.omega_zero, norm);
    rho.entries(3, 3) = ratio(scaled_pow(kp.q, -site_a - site_b) * om.omega_minus, norm);
    rho.entries(1, 2) = rho.entries(2, 1) = ratio(om.omega_zero, norm);
    return rho;
}

/// C = 2 N^2 (Omega_0 - sqrt(Omega_1 Omega_-1)) in the m = 0 sector,
/// evaluated in scaled arithmetic so it holds for arbitrary L.
inline double kink_concurrence(const KinkParams& kp, int length, int site_a, int site_b) {
    const OmegaPair om = omega_pair(kp, length, site_a, site_b, 0);
    const ScaledValue norm = normalization(kp, length, 0);
    const double c =
        2.0 * (ratio(om.omega_zero, norm) - ratio(sqrt(om.omega_plus * om.omega_minus), norm));
    return std::max(c, 0.0);
}

inline SiteDensityMatrix site_rdm(const StateVector& state, int site) {
    const SectorBasis& basis = state.basis;
    if (site < 1 || site > basis.length()) throw InvalidPair("site out of range");
    const Config mask = Config{1} << (site - 1);
    double p_up = 0.0;
    for (Index r = 0; r < basis.dim(); ++r)
        if (basis.unrank(r) & mask) p_up += state.amplitudes[r] * state.amplitudes[r];
    return SiteDensityMatrix{p_up, 1.0 - p_up, site};
}

/// Meyer-Wallach Q = 2 (1 - (1/L) sum_j Tr rho_j^2). Fixed-magnetization
/// states have diagonal one-site matrices, so the purity is p^2 + (1-p)^2.
inline double global_q(const StateVector& state) {
    const int L = state.basis.length();
    double purity_sum = 0.0;
    for (int j = 1; j <= L; ++j) {
        const SiteDensityMatrix rho = site_rdm(state, j);
        purity_sum += rho.p_up * rho.p_up + rho.p_down * rho.p_down;
    }
    return 2.0 * (1.0 - purity_sum / L);
}

/// Direct Meyer-Wallach evaluation: Q = (4/L) sum_j D(u,v) with u, v the
/// projections on s_j = -+1/2 and D the norm-squared wedge product.
inline double global_q_wedge(const StateVector& state) {
    const int L = state.basis.length();
    if (L > 16) throw TooLargeForOracle("wedge-product route limited to L <= 16");
    const Index full = Index{1} << L;
    Eigen::VectorXd psi = Eigen::VectorXd::Zero(full);
    for (Index r = 0; r < state.basis.dim(); ++r)
        psi[static_cast<Index>(state.basis.unrank(r))] = state.amplitudes[r];

    const Index half = full / 2;
    Eigen::VectorXd u(half), v(half);
    double total = 0.0;
    for (int j = 1; j <= L; ++j) {
        const Config low_mask = (Config{1} << (j - 1)) - 1;
        for (Index x = 0; x < half; ++x) {
            const Config rest = (static_cast<Config>(x) & low_mask) |
                                ((static_cast<Config>(x) & ~low_mask) << 1);
            u[x] = psi[static_cast<Index>(rest)];                             // s_j = -1/2
            v[x] = psi[static_cast<Index>(rest | (Config{1} << (j - 1)))];    // s_j = +1/2
        }
        double d = 0.0;
        for (Index x = 0; x < half; ++x)
            for (Index y = x + 1; y < half; ++y) {
                const double w = u[x] * v[y] - u[y] * v[x];
                d += w * w;
            }
        total += d;
    }
    return 4.0 * total / L;
}

/// Analytic Q from the one-site Omega sums, via prefix/suffix sweeps so the
/// whole chain costs O(L^2).
inline double kink_global_q(const KinkParams& kp, int length, int two_m) {
    detail::check_sector(length, two_m);
    std::vector<OmegaTable> prefix(length + 1), suffix(length + 2);
    prefix[0] = OmegaTable::empty_set();
    for (int j = 1; j <= length; ++j) {
        prefix[j] = prefix[j - 1];
        prefix[j].add_site(kp.q, j);
    }
    suffix[length + 1] = OmegaTable::empty_set();
    for (int j = length; j >= 1; --j) {
        suffix[j] = suffix[j + 1];
        suffix[j].add_site(kp.q, j);
    }
    const ScaledValue norm = prefix[length].at_two_sz(two_m);
    if (norm.is_zero()) throw InvalidSector("empty sector");

    double purity_sum = 0.0;
    for (int a = 1; a <= length; ++a) {
        const ScaledValue om_up = convolve_at(prefix[a - 1], suffix[a + 1], two_m - 1);
        const ScaledValue om_down = convolve_at(prefix[a - 1], suffix[a + 1], two_m + 1);
        const double p_up = ratio(scaled_pow(kp.q, a) * om_up, norm);
        const double p_down = ratio(scaled_pow(kp.q, -a) * om_down, norm);
        purity_sum += p_up * p_up + p_down * p_down;
    }
    return 2.0 * (1.0 - purity_sum / length);
}

inline double zz_correlation(const StateVector& state, int site_i, int site_j) {
    const SectorBasis& basis = state.basis;
    const int L = basis.length();
    if (site_i < 1 || site_i > L || site_j < 1 || site_j > L || site_i == site_j)
        throw InvalidPair("zz_correlation: invalid sites");
    double acc = 0.0;
    for (Index r = 0; r < basis.dim(); ++r) {
        const SpinConfig c{basis.unrank(r), L};
        acc += state.amplitudes[r] * state.amplitudes[r] *
               (c.twice_spin(site_i) * c.twice_spin(site_j) / 4.0);
    }
    return acc;
}

}  // namespace kinkchain
