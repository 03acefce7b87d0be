#pragma once

#include <stdexcept>
#include <string>

namespace bsgw {

// Base of all library errors. exit_code() is what the CLI returns for it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 1; }
};

// Malformed or out-of-range user input.
class InputError : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold (e.g. condition (P) fails and
// degeneration was not forced).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// An enumeration exceeded its cap. Carries the count reached so far.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, unsigned long long partial)
      : Error(what), partial_(partial) {}
  unsigned long long partial_count() const noexcept { return partial_; }

 private:
  unsigned long long partial_;
};

// A proven identity failed to hold: this is a bug, not bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

}  // namespace bsgw
