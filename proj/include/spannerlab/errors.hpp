// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace spannerlab {

// Stable error classes; the CLI maps each to a distinct exit code.
enum class ErrorCode {
    Usage = 2,
    Parse = 3,
    PathOverflow = 4,
    IterationLimit = 5,
    FaultBudgetTooLarge = 6,
    NumericalFailure = 7,
    CertificateInfeasible = 8,
    TooLarge = 9,
    NoFeasiblePath = 10,
    ParameterOverflow = 11,
    InvalidK = 12,
    Infeasible = 13,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

struct PathOverflow : Error {
    explicit PathOverflow(std::size_t max_paths)
        : Error(ErrorCode::PathOverflow,
                "stretch-path enumeration exceeded max_paths=" + std::to_string(max_paths)),
          max_paths(max_paths) {}
    std::size_t max_paths;
};

struct NumericalFailure : Error {
    explicit NumericalFailure(const std::string& what) : Error(ErrorCode::NumericalFailure, what) {}
};

struct NoFeasiblePath : Error {
    explicit NoFeasiblePath(const std::string& what) : Error(ErrorCode::NoFeasiblePath, what) {}
};

struct FaultBudgetTooLarge : Error {
    explicit FaultBudgetTooLarge(const std::string& what)
        : Error(ErrorCode::FaultBudgetTooLarge, what) {}
};

struct ParameterOverflow : Error {
    explicit ParameterOverflow(const std::string& what)
        : Error(ErrorCode::ParameterOverflow, what) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error(ErrorCode::TooLarge, what) {}
};

struct InvalidK : Error {
    explicit InvalidK(const std::string& what) : Error(ErrorCode::InvalidK, what) {}
};

struct Infeasible : Error {
    explicit Infeasible(const std::string& what) : Error(ErrorCode::Infeasible, what) {}
};

struct CertificateInfeasible : Error {
    explicit CertificateInfeasible(const std::string& what)
        : Error(ErrorCode::CertificateInfeasible, what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorCode::Parse, what) {}
};

}  // namespace spannerlab
