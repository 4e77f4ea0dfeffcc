#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stargraph {

/// Malformed text input; `line()` is 1-based, 0 when no line applies.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An input exceeds one of the configured size limits.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A check was asked to run on a graph outside its hypotheses.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace stargraph
