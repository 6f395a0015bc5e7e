#pragma once

#include <stdexcept>
#include <string>

namespace p1dyn {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Certified division failed; carries the first obstructing term (as text).
struct NonDivisibleError : Error {
    std::string obstruction;
    NonDivisibleError(const std::string& msg, std::string obstructing_term)
        : Error(msg), obstruction(std::move(obstructing_term)) {}
};

struct DegreeMismatchError : Error {
    using Error::Error;
};

struct UnknownVariableError : Error {
    using Error::Error;
};

struct ZeroPolynomialError : Error {
    using Error::Error;
};

/// Inversion hit a zero divisor; carries the nontrivial gcd (as text) so the
/// caller can decide whether a reducible modulus is fatal.
struct NotInvertibleError : Error {
    std::string gcd;
    NotInvertibleError(const std::string& msg, std::string gcd_text)
        : Error(msg), gcd(std::move(gcd_text)) {}
};

struct PoleAtPointError : Error {
    using Error::Error;
};

struct NotPeriodicError : Error {
    using Error::Error;
};

struct DegreeNot2Error : Error {
    using Error::Error;
};

/// Res(F,G) = 0: the pair does not define a rational map of its degree.
struct DegenerateMapError : Error {
    using Error::Error;
};

struct NotAnAutomorphismError : Error {
    using Error::Error;
};

struct NonPrimeOrderError : Error {
    using Error::Error;
};

struct OutOfFormulaRangeError : Error {
    using Error::Error;
};

/// A verification that is guaranteed by theory failed: implementation bug.
struct MismatchError : Error {
    using Error::Error;
};

struct ResourceLimitError : Error {
    using Error::Error;
};

struct ExcludedLocusError : Error {
    using Error::Error;
};

}  // namespace p1dyn
