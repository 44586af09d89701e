#pragma once

#include <stdexcept>
#include <string>

namespace ptile {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed tile notation; the message names the offending token.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the operation's domain (k < 2 for T_k, nonpositive input, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Construction called with parameters belonging to another case.
class WrongCaseError : public Error {
 public:
  using Error::Error;
};

/// (k, l) lies in the open class 2 <= v2(k) < v2(l).
class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

/// Document or point set is malformed (bad box, anchor outside box, ...).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Box is not a multiple of a set's period.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A construction produced something that failed its own verification.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// Input violates a structural invariant (e.g. |A| != |B| in a triple).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Gap m >= min(k, l): the tile has to be glued down first.
class ReductionRequired : public Error {
 public:
  using Error::Error;
};

/// Gap m < min(k, l): gluing does not apply.
class NoReductionNeeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ptile
