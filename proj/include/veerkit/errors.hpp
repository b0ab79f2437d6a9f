#pragma once

#include <stdexcept>
#include <string>

namespace veerkit {

// Mathematically meaningful refusal: a precondition of an operation fails.
// The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input that cannot be parsed into a model at all. CLI exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace veerkit
