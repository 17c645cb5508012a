#pragma once

#include <stdexcept>
#include <string>

namespace ecensus {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact arithmetic would wrap around; the computation aborts instead.
struct OverflowError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct ZeroVectorError : Error {
  using Error::Error;
};

struct NotPrimitiveError : Error {
  using Error::Error;
};

struct DependentVectorsError : Error {
  using Error::Error;
};

struct InvalidClassError : Error {
  using Error::Error;
};

struct ZeroMapError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

enum class CmViolation { NonPositiveW, NotCoprime, NonNegativeDiscriminant };

struct InvalidCmError : Error {
  CmViolation violation;
  InvalidCmError(CmViolation which, const std::string& msg)
      : Error(msg), violation(which) {}
};

}  // namespace ecensus
