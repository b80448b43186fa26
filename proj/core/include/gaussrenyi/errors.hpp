#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gr {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// c*x + d vanished when applying a Mobius transform.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Mobius transform with no isolated finite fixed point.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A value that was required to be irrational turned out rational.
class NotIrrational : public Error {
 public:
  using Error::Error;
};

/// (map, x) lies in the excluded set {(Gauss, 0), (Renyi, 1)}.
class UndefinedAtPoint : public Error {
 public:
  using Error::Error;
};

class CapTooSmall : public Error {
 public:
  using Error::Error;
};

class EmptySet : public Error {
 public:
  using Error::Error;
};

class InvalidDigits : public Error {
 public:
  using Error::Error;
};

class ParityMismatch : public Error {
 public:
  using Error::Error;
};

class StartsInDeletedSet : public Error {
 public:
  using Error::Error;
};

/// Two independent periodicity computations disagreed. Indicates a bug.
class DisagreementError : public Error {
 public:
  using Error::Error;
};

/// Iteration budget exhausted before an orbit repeated.
class NoPeriodWithinBudget : public Error {
 public:
  using Error::Error;
};

}  // namespace gr
