#pragma once

#include <stdexcept>
#include <string>

namespace bds {

// Caller passed an argument that violates a documented precondition.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A file could not be parsed. `line` is 1-based, 0 when unknown.
struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, int line_no)
      : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"),
        line(line_no) {}
  int line;
};

// The input is legal but exceeds what the (desk-scale) implementation can do,
// e.g. an exact solver ran out of its node budget.
struct capability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bds
