#pragma once

#include <stdexcept>
#include <string>

namespace gwt {

// Raised when a computation would exceed a configured size or depth bound.
// Distinct from std::domain_error so callers can tell "you asked for too
// much" apart from "this input is invalid".
class resource_guard_error : public std::runtime_error {
public:
    explicit resource_guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal cross-check fails: two routes that must agree
// disagree, or a structural claim about a computed object is violated.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gwt
