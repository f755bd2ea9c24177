#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ucover {

/// Malformed input: bad parentheses word, bad graph file line.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based line number, 0 when not read from a file.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// One or more trees are deeper than the requested depth.
class DepthError : public std::runtime_error {
 public:
  DepthError(const std::string& what, std::vector<std::size_t> offending)
      : std::runtime_error(what), offending_(std::move(offending)) {}

  const std::vector<std::size_t>& offending() const noexcept { return offending_; }

 private:
  std::vector<std::size_t> offending_;
};

/// Requested enumeration is too large for the brute-force oracle.
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Internal invariant broken. Reaching one of these is a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A greedy realizer got stuck on a sequence that passed its feasibility test.
class InternalInfeasible : public InternalError {
 public:
  using InternalError::InternalError;
};

/// Gluing produced a loop or a parallel edge.
class SimplicityViolation : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace ucover
