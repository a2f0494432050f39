#pragma once

#include <stdexcept>
#include <string>

namespace quanta {

/// Raised when arguments violate an operation's preconditions
/// (modulus mismatch, out-of-range residue, unparseable notation).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an exhaustive search would exceed the supported size
/// (more than 16 degrees, modulus above 64).
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

}  // namespace quanta
