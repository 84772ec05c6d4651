#pragma once

#include <stdexcept>
#include <string>

namespace hemiring {

// Malformed files, tables or command arguments. CLI exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally sound input used outside an operation's domain
// (empty subset where a non-empty one is required, parent mismatch, ...).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested computation exceeds a configured cap or budget.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace hemiring
