#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oreprime {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: zero where a nonzero element is required, ring mismatch,
/// improper ideal handed to a classifier, and similar contract violations.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The ideal is the whole ring; every primeness notion requires p != R.
class ImproperIdealError : public DomainError {
public:
    using DomainError::DomainError;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// An exhaustive search would exceed its configured candidate cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A library invariant failed (e.g. the primeness implication lattice).
/// Always a bug, never a property of the input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace oreprime
