#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hulldim {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// An element or polynomial does not belong to the field it is used with.
struct SpecMismatch : Error {
    using Error::Error;
};

struct ZeroHasNoOrder : Error {
    using Error::Error;
};

// The order r of lambda does not divide q+1, so the Hermitian dual of a
// lambda-constacyclic code is not constacyclic and nothing here applies.
struct UnsupportedOrder : Error {
    using Error::Error;
};

struct ZeroConstantTerm : Error {
    using Error::Error;
};

struct ConstantPolynomial : Error {
    using Error::Error;
};

struct ExponentRange : Error {
    using Error::Error;
};

struct NotCoprime : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct Overflow : Error {
    using Error::Error;
};

// A request exceeds the enforced desk-scale limits. `count` carries the
// offending size (enumeration count, nbar*r, or splitting degree).
struct ScaleLimit : Error {
    ScaleLimit(const std::string& msg, int64_t count_) : Error(msg), count(count_) {}
    int64_t count;
};

// A redundant internal check failed; indicates a bug, never user input.
struct InternalInvariantViolation : Error {
    using Error::Error;
};

} // namespace hulldim
