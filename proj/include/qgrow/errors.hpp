#pragma once

#include <stdexcept>
#include <string>

namespace qgrow {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Scalars from sessions with different exponent denominators were mixed.
class SessionMismatch : public Error {
public:
    explicit SessionMismatch(const std::string& msg) : Error(msg) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

/// Invalid argument at a domain boundary (rank out of range, bad index, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// A structural assumption failed (eigenspace not stable, route disagreement, ...).
class ConventionFault : public Error {
public:
    explicit ConventionFault(const std::string& msg) : Error(msg) {}
};

} // namespace qgrow
