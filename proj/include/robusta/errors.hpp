#pragma once

#include <stdexcept>
#include <string>

namespace robusta {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-scope input (parse errors, mismatched contexts,
/// non-homogeneous ideals, ...). The CLI maps this to exit code 1.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// A configured resource limit (S-pairs, cells, multidegrees, ...) was hit.
/// The CLI maps this to exit code 2.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class NoPositiveGrading : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

/// A hypothesis required by the operation does not hold.
class HypothesisViolation : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

/// No torus rescaling over the rationals turns the coefficients into +1/-1.
/// what() carries the certificate (the obstructing prime or the sign system).
class NotRescalable : public Error {
public:
  using Error::Error;
};

class OverflowError : public Error {
public:
  using Error::Error;
};

} // namespace robusta
