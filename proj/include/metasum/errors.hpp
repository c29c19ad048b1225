#pragma once

#include <stdexcept>
#include <string>

namespace metasum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Presentation parameters fail one of the two congruences.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

// A brute-force operation would enumerate more elements than allowed.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class OverflowDetected : public Error {
 public:
  using Error::Error;
};

class NotAPower : public Error {
 public:
  using Error::Error;
};

class ConditionFails : public Error {
 public:
  using Error::Error;
};

class SearchFailed : public Error {
 public:
  using Error::Error;
};

class CosetLimitExceeded : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace metasum
