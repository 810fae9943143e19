#pragma once

#include <stdexcept>
#include <string>

namespace holodiff {

// Raised when user-supplied data violates a documented precondition.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal identity fails; indicates inconsistent data or a bug.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace holodiff
