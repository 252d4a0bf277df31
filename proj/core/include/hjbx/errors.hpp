#pragma once

#include <stdexcept>
#include <string>

namespace hjbx {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A vector/tensor/system dimension does not match its counterpart.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// R failed its positive-definiteness factorization.
struct IndefiniteR : Error {
    using Error::Error;
};

/// The Riccati iteration failed to converge or the closed loop is not Hurwitz.
struct NonStabilizable : Error {
    using Error::Error;
};

/// The linear operator on a degree-k monomial space is singular beyond
/// tolerance (some sum of k closed-loop eigenvalues vanishes).
struct ResonantOperator : Error {
    using Error::Error;
};

/// Eigenvector basis of the closed loop is deficient beyond tolerance.
struct DefectiveMatrix : Error {
    using Error::Error;
};

/// The as-printed 3-mode fixture was requested with N != 3.
struct AsPrintedUnavailable : Error {
    using Error::Error;
};

/// Structural failure while reading a config or coefficient file.
struct ParseError : Error {
    ParseError(int line_number, const std::string& message)
        : Error("line " + std::to_string(line_number) + ": " + message), line(line_number) {}
    int line;
};

/// A config value is structurally fine but semantically invalid.
struct ValidationError : Error {
    ValidationError(std::string key_name, const std::string& message)
        : Error(key_name + ": " + message), key(std::move(key_name)) {}
    std::string key;
};

} // namespace hjbx
