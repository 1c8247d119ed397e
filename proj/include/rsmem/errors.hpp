#pragma once

#include <stdexcept>
#include <string>

namespace rsmem {

/// Invalid domain parameters (code bounds, negative rates, bad grids, ...).
class ConstraintViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// State-space enumeration exceeded the configured cap.
class ModelTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The transient solver hit a non-finite or otherwise unusable quantity.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scenario file rejected. `line` is 1-based; 0 when no position is known.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace rsmem
