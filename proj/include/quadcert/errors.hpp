#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadcert {

// An interval or jet evaluation left its mathematical domain: division by
// an interval containing zero, log/sqrt of a non-positive interval,
// endpoint overflow, and the like.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A point evaluation outside the natural domain of an expression.
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejected expression text; offset() is the 0-based character position.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& message, std::size_t offset)
        : std::runtime_error(message), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A quadrature rule could not be certified on the requested interval.
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace quadcert
