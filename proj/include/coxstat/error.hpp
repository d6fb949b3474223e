#pragma once

#include <stdexcept>
#include <string>

namespace coxstat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text, out-of-range parameter or violated precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two operands live in different groups (or universes of different size).
class DescriptorMismatch : public Error {
 public:
  using Error::Error;
};

/// A statistic was requested on a family it is not defined for.
class WrongFamily : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured element budget.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The pair (f, g) has a non-symmetric joint distribution, so no involution
/// with f = g o iota exists.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

/// A base statistic failed the class check against the parabolic length.
class NotInLengthClass : public Error {
 public:
  using Error::Error;
};

}  // namespace coxstat
