#pragma once

#include <stdexcept>
#include <string>

namespace nlperim {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define NLPERIM_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
  public:                                                            \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

NLPERIM_DEFINE_ERROR(NonFiniteKernelValue);
NLPERIM_DEFINE_ERROR(NonPositiveEpsilon);
NLPERIM_DEFINE_ERROR(QuadratureInconsistency);
NLPERIM_DEFINE_ERROR(UnknownKernel);
NLPERIM_DEFINE_ERROR(UnsupportedDimension);
NLPERIM_DEFINE_ERROR(DegenerateShape);
NLPERIM_DEFINE_ERROR(UnsupportedShape);
NLPERIM_DEFINE_ERROR(GridMismatch);
NLPERIM_DEFINE_ERROR(BudgetExceeded);
NLPERIM_DEFINE_ERROR(CollarTooSmall);
NLPERIM_DEFINE_ERROR(SingularWeightOverflow);
NLPERIM_DEFINE_ERROR(SetsOverlap);
NLPERIM_DEFINE_ERROR(NonFiniteLevels);
NLPERIM_DEFINE_ERROR(NonConvexDomain);
NLPERIM_DEFINE_ERROR(InsufficientPoints);
NLPERIM_DEFINE_ERROR(InvalidArgument);
NLPERIM_DEFINE_ERROR(IoError);

#undef NLPERIM_DEFINE_ERROR

}  // namespace nlperim
