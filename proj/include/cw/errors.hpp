#pragma once

#include <stdexcept>
#include <string>

namespace cw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap (elements, lattice states, dimension) was exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The requested Coxeter type or operation is not available for this type.
class UnsupportedType : public Error {
 public:
  using Error::Error;
};

/// A braid parameter lambda_s = -1 was supplied where an inverse is needed.
class NonInvertibleLambda : public Error {
 public:
  using Error::Error;
};

/// Parameters make a construction degenerate (e.g. 2(u+1) not invertible).
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

/// The torus order d is not invertible in the chosen scalar ring.
class DNotInvertible : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (type strings, literals, cache files).
class BadConfig : public Error {
 public:
  using Error::Error;
};

}  // namespace cw
