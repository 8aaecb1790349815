#ifndef PERMLAB_ERRORS_HPP
#define PERMLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace permlab {

// Violated operation precondition (bad argument, wrong length, ...).
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A configured size cap (group order, state-space size, ...) was exceeded.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace permlab

#endif
