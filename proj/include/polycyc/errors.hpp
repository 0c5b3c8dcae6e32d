#pragma once

#include <stdexcept>
#include <string>

namespace polycyc {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violated an operation's precondition (bad shape, wrong ring,
// non-monic polynomial, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The input was well formed but the requested object does not exist:
// a singular matrix, a polynomial outside class J, a spectrum that is not
// a transform image.
class MathError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized payload.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace polycyc
