#pragma once

#include <stdexcept>
#include <string>

namespace sqdepth {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejected input (malformed file, violated validation rule, infeasible
// parameters).  `rule` is a stable machine-readable identifier.
struct InputError : Error {
    std::string rule;
    InputError(std::string rule_, const std::string& what_)
        : Error(rule_ + ": " + what_), rule(std::move(rule_)) {}
};

// An operation's applicability precondition does not hold (this is a verdict
// about the instance, not a malformed input).
struct InapplicableError : Error {
    using Error::Error;
};

// A search exhausted its node budget.
struct TimeoutError : Error {
    using Error::Error;
};

}  // namespace sqdepth
