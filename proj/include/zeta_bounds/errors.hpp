#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zeta_bounds {

/// A precondition on a formula's parameters or height was violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An argument lies outside the range covered by a precomputed structure
/// (sieve limit, zero table).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class CoverageError : public RangeError {
 public:
  using RangeError::RangeError;
};

/// A request would exceed a configured memory cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoRootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class OrderError : public ParseError {
 public:
  using ParseError::ParseError;
};

namespace detail {

inline void require(bool ok, char const* message) {
  if (!ok) throw DomainError(message);
}

}  // namespace detail
}  // namespace zeta_bounds
