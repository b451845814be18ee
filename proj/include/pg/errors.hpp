#pragma once

#include <stdexcept>
#include <string>

namespace pg {

// Thrown when a closed-form value and an independently computed value that
// must agree with it do not. Reaching this means either the code or the
// formula it implements is wrong, so it is kept apart from ordinary
// precondition failures (std::invalid_argument).
struct invariant_violation : std::logic_error {
  explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pg
