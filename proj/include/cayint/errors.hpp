#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cayint {

/// Malformed or mismatched data: wrong dimensions, ring orders, non-subgroups.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text input (group spec, set expression) could not be parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& reason)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + reason),
        position_(position),
        reason_(reason) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

/// Iterative numeric routine failed to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cayint
