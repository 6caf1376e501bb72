// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <stdexcept>
#include <string>

namespace agtrellis {

/// Every recoverable failure in the library throws Error with one of
/// these codes. The CLI maps any Error to exit code 2.
enum class Errc {
    // field construction and arithmetic
    NotPrime,
    ReducibleModulus,
    FieldTooLarge,
    DivisionByZero,
    MixedFields,
    // matrices
    IndexOutOfRange,
    ShapeMismatch,
    ZeroMatrix,
    // codes and profiles
    SelfDualDegenerate,
    EnumerationTooLarge,
    NotAPermutation,
    BudgetZero,
    ExhaustiveTooLarge,
    ZeroWeightEntry,
    // gonality sequences
    DegreeTooSmall,
    GenusTooSmall,
    NotIncreasing,
    BoundsViolated,
    SymmetryViolated,
    BelowDomain,
    OutOfDomain,
    // curve codes and bounds
    UnsupportedQ,
    AbundantRegime,
    HypothesisViolated,
    // file formats
    ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

} // namespace agtrellis
