#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unigraph {

/// Malformed argument or violated precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search was asked to run past its configured size limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A finite-group table failed an axiom; what() names the witness.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// File content could not be read as a digraph.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A construction produced a matrix that failed its own verification.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace unigraph
