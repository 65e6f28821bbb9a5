#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace quadriline {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed literal, configuration file or command-line value.
class ParseError : public Error {
 public:
  ParseError(const std::string& location, const std::string& what)
      : Error(location.empty() ? what : location + ": " + what), location_(location) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// An operation was called outside its domain (a mathematical precondition failed).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public PreconditionError {
 public:
  FieldMismatch() : PreconditionError("operands belong to different fields") {}
};

class DegenerateConfiguration : public PreconditionError {
 public:
  DegenerateConfiguration()
      : PreconditionError("configuration is degenerate (diagonals E and F are orthogonal)") {}
};

class AtInfinityRectangle : public PreconditionError {
 public:
  AtInfinityRectangle() : PreconditionError("rectangle is at infinity (w = 0)") {}
};

class AllParallelLines : public PreconditionError {
 public:
  AllParallelLines() : PreconditionError("all four lines are parallel") {}
};

/// A construction needs the intersection of two lines that are parallel or equal.
class ParallelPairObstruction : public PreconditionError {
 public:
  explicit ParallelPairObstruction(std::string pair)
      : PreconditionError("lines " + pair + " do not meet in a single affine point"),
        pair_(std::move(pair)) {}

  const std::string& pair() const noexcept { return pair_; }

 private:
  std::string pair_;
};

/// A theorem-level identity failed to hold. Indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace quadriline
