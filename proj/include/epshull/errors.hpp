#pragma once

#include <stdexcept>
#include <string>

namespace epshull {

// Caller passed something outside an operation's documented domain.
struct InvalidInputError : std::invalid_argument {
    explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

// An oracle was asked for more than its documented size limit.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative method failed to certify the requested tolerance.
// best_bound carries the tightest bound reached before giving up.
struct NumericFailureError : std::runtime_error {
    NumericFailureError(const std::string& what, double best_bound_arg)
        : std::runtime_error(what), best_bound(best_bound_arg) {}
    double best_bound;
};

}  // namespace epshull
