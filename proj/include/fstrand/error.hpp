#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fstrand {

// Raised when an argument is well-formed but outside the operation's domain
// (arity mismatch, non-dyadic endpoint, boundary point, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position_(pos) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace fstrand
