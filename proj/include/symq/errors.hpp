#pragma once

#include <stdexcept>
#include <string>

namespace symq {

// Thrown when a size guard or search budget refuses to run at all.
// Distinct from std::invalid_argument, which signals malformed input.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace symq
