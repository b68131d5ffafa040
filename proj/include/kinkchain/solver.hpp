// Copyright 2026 The Kinkchain Authors
// SPDX-License-Identifier: Apache-2.0
//
// Lowest eigenpairs of a SectorHamiltonian: Lanczos with full
// reorthogonalization (restarted to cap the stored basis) and a dense
// fallback for small sectors, plus the cross-sector ground-state scan.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "kinkchain/hamiltonian.hpp"

namespace kinkchain {

struct StateVector {
    SectorBasis basis;
    Eigen::VectorXd amplitudes;
    double energy = 0.0;
    double residual = 0.0;
};

struct SolverOptions {
    double tol = 1e-10;
    Index dense_threshold = 512;
    int max_matvecs = 5000;
    int max_basis = 120;           // stored Lanczos vectors per restart cycle
    unsigned seed = 12345;         // start-vector seed, fixed for reproducibility
    int workers = 1;
};

namespace detail {

inline void fix_sign(Eigen::VectorXd& v) {
    Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (v[imax] < 0) v = -v;
}

inline std::vector<StateVector> dense_eigenpairs(const SectorHamiltonian& H, int k) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H.dense_matrix());
    std::vector<StateVector> out;
    for (int i = 0; i < k; ++i) {
        Eigen::VectorXd v = es.eigenvectors().col(i);
        v.normalize();
        detail::fix_sign(v);
        const double e = es.eigenvalues()[i];
        const double res = (H.apply(v) - e * v).norm();
        out.push_back(StateVector{H.basis(), std::move(v), e, res});
    }
    return out;
}

/// One restarted Lanczos run for the lowest eigenpair of H restricted to the
/// orthogonal complement of `locked`. Returns nullopt on matvec exhaustion.
inline std::optional<StateVector> lanczos_lowest(const SectorHamiltonian& H,
                                                 const std::vector<Eigen::VectorXd>& locked,
                                                 const SolverOptions& opt, int& matvecs,
                                                 double& best_residual) {
    const Index n = H.dim();
    std::mt19937 rng(opt.seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::VectorXd start(n);
    for (Index i = 0; i < n; ++i) start[i] = dist(rng);

    auto project_out_locked = [&](Eigen::VectorXd& v) {
        for (const auto& u : locked) v -= u.dot(v) * u;
    };

    const int m_max = static_cast<int>(std::min<Index>(n, opt.max_basis));
    Eigen::MatrixXd V(n, m_max);
    Eigen::VectorXd alpha(m_max), beta(m_max), w(n);

    project_out_locked(start);
    start.normalize();

    while (matvecs < opt.max_matvecs) {
        V.col(0) = start;
        int m = 0;
        double beta_last = 0.0;
        for (int j = 0; j < m_max && matvecs < opt.max_matvecs; ++j) {
            H.matvec(V.col(j), w, opt.workers);
            ++matvecs;
            alpha[j] = V.col(j).dot(w);
            // full reorthogonalization, two passes
            for (int pass = 0; pass < 2; ++pass) {
                project_out_locked(w);
                w -= V.leftCols(j + 1) * (V.leftCols(j + 1).transpose() * w);
            }
            m = j + 1;
            beta_last = w.norm();
            if (j + 1 < m_max) {
                if (beta_last < 1e-14) break;  // invariant subspace found
                beta[j] = beta_last;
                V.col(j + 1) = w / beta_last;
            }
        }

        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
        for (int j = 0; j < m; ++j) {
            T(j, j) = alpha[j];
            if (j + 1 < m) T(j, j + 1) = T(j + 1, j) = beta[j];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
        const double theta = es.eigenvalues()[0];
        Eigen::VectorXd ritz = V.leftCols(m) * es.eigenvectors().col(0);
        project_out_locked(ritz);
        ritz.normalize();

        const double residual = (H.apply(ritz, opt.workers) - theta * ritz).norm();
        ++matvecs;
        best_residual = std::min(best_residual, residual);
        if (residual <= opt.tol || m >= static_cast<int>(n) - static_cast<int>(locked.size())) {
            detail::fix_sign(ritz);
            return StateVector{H.basis(), std::move(ritz), theta, residual};
        }
        start = ritz;  // restart from the current Ritz vector
    }
    return std::nullopt;
}

}  // namespace detail

inline std::vector<StateVector> lowest_eigenpair(const SectorHamiltonian& H, int k = 1,
                                                 const SolverOptions& opt = {}) {
    if (k < 1 || static_cast<Index>(k) > H.dim())
        throw DimensionError("lowest_eigenpair: invalid k");
    if (H.dim() <= opt.dense_threshold) return detail::dense_eigenpairs(H, k);

    std::vector<StateVector> out;
    std::vector<Eigen::VectorXd> locked;
    int matvecs = 0;
    double best_residual = std::numeric_limits<double>::infinity();
    for (int i = 0; i < k; ++i) {
        auto sv = detail::lanczos_lowest(H, locked, opt, matvecs, best_residual);
        if (!sv)
            throw ConvergenceError("Lanczos failed to converge within matvec budget",
                                   best_residual);
        locked.push_back(sv->amplitudes);
        out.push_back(std::move(*sv));
    }
    std::sort(out.begin(), out.end(),
              [](const StateVector& a, const StateVector& b) { return a.energy < b.energy; });
    return out;
}

struct GroundStateReport {
    std::vector<std::pair<int, double>> per_sector;  // (two_m, ground energy)
    double global_energy = 0.0;
    std::vector<int> winners;  // two_m values within degeneracy_tol of the minimum
    bool degenerate = false;
};

inline GroundStateReport ground_state_scan(const ModelParams& params, int length,
                                           double degeneracy_tol = 1e-8,
                                           const SolverOptions& opt = {}) {
    GroundStateReport report;
    for (int two_m = -length; two_m <= length; two_m += 2) {
        SectorHamiltonian H(params, build_sector(length, two_m));
        double e;
        if (H.dim() == 1) {
            e = H.diagonal()[0];
        } else {
            try {
                e = lowest_eigenpair(H, 1, opt).front().energy;
            } catch (ConvergenceError& err) {
                throw ConvergenceError("sector two_m=" + std::to_string(two_m) + ": " +
                                           err.what(),
                                       err.best_residual);
            }
        }
        report.per_sector.emplace_back(two_m, e);
    }
    report.global_energy = report.per_sector.front().second;
    for (const auto& [two_m, e] : report.per_sector)
        report.global_energy = std::min(report.global_energy, e);
    for (const auto& [two_m, e] : report.per_sector)
        if (e <= report.global_energy + degeneracy_tol) report.winners.push_back(two_m);
    report.degenerate = report.winners.size() > 1;
    return report;
}

}  // namespace kinkchain
