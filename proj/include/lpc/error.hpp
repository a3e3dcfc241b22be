#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t expected, std::size_t got)
        : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                std::to_string(got)) {}
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// A hypothesis of a construction is not met (e.g. a non-abelian subalgebra
/// handed to the moment-map base).
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// An enumeration exceeded its combinatorial budget.
class ResourceError : public Error {
public:
    ResourceError(const std::string& what, unsigned degree)
        : Error(what + " (degree " + std::to_string(degree) + ")"), degree_(degree) {}
    unsigned degree() const noexcept { return degree_; }

private:
    unsigned degree_;
};

class IllFormedChain : public Error {
public:
    IllFormedChain(const std::string& what, std::string witness)
        : Error(what), witness_(std::move(witness)) {}
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

class FlowError : public Error {
public:
    FlowError(const std::string& what, double time)
        : Error(what + " at t=" + std::to_string(time)), time_(time) {}
    double time() const noexcept { return time_; }

private:
    double time_;
};

}  // namespace lpc
