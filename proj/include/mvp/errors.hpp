#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed expression text. position is a 0-based byte offset into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error("parse error at offset " + std::to_string(position) + ": " + message),
          position_(position), message_(message) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t position_;
    std::string message_;
};

// Mathematically undefined request: zero to a negative power, exponent overflow,
// negative polynomial powers, unbound symbols and so on.
class DomainError : public Error {
public:
    using Error::Error;
};

// Elementwise combination of disord objects with different provenance.
class HashMismatch : public Error {
public:
    HashMismatch(const std::string& lhs, const std::string& rhs)
        : Error("hash codes " + lhs + " and " + rhs + " do not match"), lhs_(lhs), rhs_(rhs) {}

    const std::string& lhs() const noexcept { return lhs_; }
    const std::string& rhs() const noexcept { return rhs_; }

private:
    std::string lhs_;
    std::string rhs_;
};

}  // namespace mvp
