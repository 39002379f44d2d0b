#pragma once

#include <stdexcept>
#include <string>

namespace ade {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Binary operation on polynomials tagged with different variables.
class VariableMismatch : public Error {
 public:
  using Error::Error;
};

// Arithmetic between cyclotomic numbers of different conductors.
class ConductorMismatch : public Error {
 public:
  using Error::Error;
};

class NotRational : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class NonPolynomialResult : public Error {
 public:
  using Error::Error;
};

class ClosureOverflow : public Error {
 public:
  using Error::Error;
};

class ValidationFailed : public Error {
 public:
  using Error::Error;
};

class NoIsomorphism : public Error {
 public:
  using Error::Error;
};

}  // namespace ade
