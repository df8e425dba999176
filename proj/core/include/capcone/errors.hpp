#pragma once

#include <stdexcept>
#include <string>

namespace capcone {

// Violated mathematical precondition (wall incidence, sign constraint,
// dimension mismatch, ...).  Distinct from std::invalid_argument, which is
// reserved for malformed input text and bad usage; the CLI maps math_error
// to exit code 1 and usage errors to exit code 2.
class math_error : public std::runtime_error {
 public:
  explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace capcone
