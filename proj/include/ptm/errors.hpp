#pragma once

#include <stdexcept>
#include <string>

namespace ptm {

// Base of all contract errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// No program within the searched length and budget produced the target.
class NotFound : public Error {
 public:
  using Error::Error;
};

// A Kraft-Chaitin request that would push the allocated mass above 1.
class KraftViolation : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace ptm
