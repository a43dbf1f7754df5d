#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ngw {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input exceeds a vertex capacity or an enumeration state ceiling.
class CapacityError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A theorem was asked for outside its hypotheses.
class InapplicableError : public Error {
public:
    using Error::Error;
};

class InfeasibleError : public Error {
public:
    using Error::Error;
};

// Two independent routes to the same quantity produced different answers.
class SolverDisagreement : public Error {
public:
    using Error::Error;
};

// An assertable theorem bound was contradicted by a computed value.
class BoundViolation : public Error {
public:
    BoundViolation(const std::string& what, std::string witness)
        : Error(what), witness_(std::move(witness)) {}

    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

} // namespace ngw
