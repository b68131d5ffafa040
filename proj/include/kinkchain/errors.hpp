// Copyright 2026 The Kinkchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace kinkchain {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidSector : Error {
    using Error::Error;
};
struct NotInSector : Error {
    using Error::Error;
};
struct DimensionError : Error {
    using Error::Error;
};
struct TooLargeForDense : Error {
    using Error::Error;
};
struct ConvergenceError : Error {
    ConvergenceError(const std::string& msg, double residual)
        : Error(msg), best_residual(residual) {}
    double best_residual;
};
struct OutOfKinkRegime : Error {
    using Error::Error;
};
struct InvalidPair : Error {
    using Error::Error;
};
struct InvalidDensityMatrix : Error {
    using Error::Error;
};
struct TooLargeForOracle : Error {
    using Error::Error;
};
struct JumpNotFound : Error {
    using Error::Error;
};
struct FitError : Error {
    using Error::Error;
};
struct FerroPhase : Error {
    using Error::Error;
};
struct DegenerateGroundState : Error {
    using Error::Error;
};

}  // namespace kinkchain
