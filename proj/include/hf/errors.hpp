#pragma once

#include <stdexcept>
#include <string>

namespace hf {

// Bad user input: malformed documents, precondition violations.
// CLI maps this to exit code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation could not certify its answer within its probe window
// (e.g. base-locus dimension detection). CLI maps this to exit code 2.
class IndeterminateError : public std::runtime_error {
public:
    explicit IndeterminateError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hf
