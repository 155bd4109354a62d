#ifndef MODKALT_ERRORS_HPP
#define MODKALT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modkalt {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An exact division was requested but the divisor does not divide.
struct NotDivisibleError : Error {
  using Error::Error;
};

/// A permutation has the wrong length for the requested operation.
struct SizeMismatchError : Error {
  using Error::Error;
};

/// Inconsistent (n, k, r) parameters.
struct InvalidSpecError : Error {
  using Error::Error;
};

/// A computation exceeds its configured size budget.
struct SizeLimitError : Error {
  using Error::Error;
};

/// Sequence lengths passed to a structured solver do not line up.
struct LengthMismatchError : Error {
  using Error::Error;
};

/// Gamma decomposition requested for a non-palindromic polynomial.
struct NotPalindromicError : Error {
  using Error::Error;
};

/// Certification requested outside the theorem's hypotheses.
struct HypothesisViolatedError : Error {
  using Error::Error;
};

/// Lemma check invoked on inputs that fail the lemma's hypotheses.
struct PreconditionUnmetError : Error {
  using Error::Error;
};

}  // namespace modkalt

#endif  // MODKALT_ERRORS_HPP
