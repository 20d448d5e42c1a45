#pragma once

#include <stdexcept>
#include <string>

namespace pdlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mixed coefficient domains, rings, or an operation outside its domain
// (e.g. inverting zero, dividing non-divisible monomials).
class DomainError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// Invalid user-facing input: family parameters, field choice, options.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A computation exceeded a configured bound (pair queue, degree, kernel
// lane width). Partial results may be attached by the caller.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace pdlab
