// Copyright 2026 The Kinkchain Authors
// SPDX-License-Identifier: Apache-2.0
//
// Matrix-free XXZ chain with antiparallel boundary fields,
//
//   H = -J sum_i (Sx_i Sx_{i+1} + Sy_i Sy_{i+1}) - Delta sum_i Sz_i Sz_{i+1}
//       - h (Sz_1 - Sz_L),
//
// restricted to one magnetization sector. The XY term is applied through the
// ladder form (S+S- + S-S+)/2, so all matrix elements are real and the
// off-diagonal ones equal -J/2.

#pragma once

#include <Eigen/Dense>

#include "kinkchain/basis.hpp"
#include "kinkchain/errors.hpp"
#include "kinkchain/parallel.hpp"

namespace kinkchain {

struct ModelParams {
    double J = 1.0;
    double delta = 1.0;
    double h = 0.0;
};

inline double diagonal_energy(const ModelParams& p, const SpinConfig& c) {
    // twice-spins t_j = 2 s_j = +-1
    int zz4 = 0;  // 4 * sum s_i s_{i+1}
    for (int site = 1; site < c.length; ++site)
        zz4 += c.twice_spin(site) * c.twice_spin(site + 1);
    const int bnd2 = c.twice_spin(1) - c.twice_spin(c.length);  // 2*(s_1 - s_L)
    return -p.delta * zz4 / 4.0 - p.h * bnd2 / 2.0;
}

class SectorHamiltonian {
public:
    SectorHamiltonian(ModelParams params, SectorBasis basis)
        : params_(params), basis_(std::move(basis)), diagonal_(basis_.dim()) {
        for (Index r = 0; r < basis_.dim(); ++r)
            diagonal_[r] = diagonal_energy(params_, basis_.config(r));
    }

    const ModelParams& params() const { return params_; }
    const SectorBasis& basis() const { return basis_; }
    Index dim() const { return basis_.dim(); }
    const Eigen::VectorXd& diagonal() const { return diagonal_; }

    /// y = H x. Gather form: each output entry pulls from its hopping
    /// partners, so partitioning the output range across workers is safe.
    void matvec(const Eigen::VectorXd& x, Eigen::VectorXd& y, int workers = 1) const {
        if (x.size() != dim()) throw DimensionError("matvec: vector has wrong dimension");
        y.resize(dim());
        const double hop = -params_.J / 2.0;
        const int L = basis_.length();
        parallel_for(dim(), workers, [&](Index r) {
            const Config bits = basis_.unrank(r);
            double acc = diagonal_[r] * x[r];
            // Incremental combinatorial ranking: swapping the bits of bond
            // (p, p+1) moves one set bit by one position; with c set bits
            // strictly below p the rank changes by +-(C(p+1,c+1) - C(p,c+1)).
            Index partner = r;
            int ones_below = 0;
            for (int p = 0; p + 1 < L; ++p) {
                const bool lo = (bits >> p) & 1u;
                const bool hi = (bits >> (p + 1)) & 1u;
                if (lo != hi) {
                    const Index step = static_cast<Index>(binomial(p + 1, ones_below + 1)) -
                                       static_cast<Index>(binomial(p, ones_below + 1));
                    acc += hop * x[lo ? partner + step : partner - step];
                }
                if (lo) ++ones_below;
            }
            y[r] = acc;
        });
    }

    Eigen::VectorXd apply(const Eigen::VectorXd& x, int workers = 1) const {
        Eigen::VectorXd y;
        matvec(x, y, workers);
        return y;
    }

    Eigen::MatrixXd dense_matrix() const {
        if (dim() > 4096) throw TooLargeForDense("sector dimension exceeds dense limit");
        Eigen::MatrixXd m(dim(), dim());
        Eigen::VectorXd e = Eigen::VectorXd::Zero(dim()), col;
        for (Index j = 0; j < dim(); ++j) {
            e[j] = 1.0;
            matvec(e, col);
            m.col(j) = col;
            e[j] = 0.0;
        }
        return m;
    }

private:
    ModelParams params_;
    SectorBasis basis_;
    Eigen::VectorXd diagonal_;
};

}  // namespace kinkchain
