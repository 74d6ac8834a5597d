#pragma once

#include <stdexcept>

namespace symmcouple {

// Bad inputs, violated preconditions, malformed DSL / files. CLI exit code 2.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Iterative solver failed to reach its tolerance. CLI exit code 3.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace symmcouple
