#pragma once

#include <stdexcept>
#include <string>

namespace mdroute {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: dimension mismatch, index out of range, bad parameter.
class InputError : public Error {
 public:
  using Error::Error;
};

// A structurally well-formed value that breaks a model invariant
// (duplicate depots, unsorted release dates, metric axiom violations).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : ValidationError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A scheme or oracle was asked to run on depots it is not defined for.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exact oracle or enumeration would exceed its configured size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace mdroute
