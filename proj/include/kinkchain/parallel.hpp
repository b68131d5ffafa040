// Copyright 2026 The Kinkchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace kinkchain {

/// Worker count used by parallel loops. Resolution order: explicit argument,
/// KINKCHAIN_WORKERS, hardware concurrency.
inline int default_workers() {
    if (const char* env = std::getenv("KINKCHAIN_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Index-partitioned parallel loop. Each index is processed by exactly one
/// worker; results must be written to per-index slots so the outcome does
/// not depend on the worker count.
template <typename F>
void parallel_for(std::int64_t n, int workers, F&& body) {
    if (workers <= 1 || n <= 1) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
    const int nw = static_cast<int>(std::min<std::int64_t>(workers, n));
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (int w = 0; w < nw; ++w) {
        const std::int64_t lo = n * w / nw;
        const std::int64_t hi = n * (w + 1) / nw;
        pool.emplace_back([lo, hi, &body] {
            for (std::int64_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace kinkchain
