#pragma once

#include <stdexcept>
#include <string>

namespace omkit {

/// Sign vectors (or tuples, or matrices) of incompatible lengths.
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the domain of a partial operation.
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A desk-scale size bound was exceeded.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_marking_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class rank_deficient_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input. `line()` is 1-based, 0 when unknown.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace omkit
