#pragma once

#include <stdexcept>
#include <string>

namespace sysid {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SYSID_DEFINE_ERROR(Name)            \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

SYSID_DEFINE_ERROR(DimensionMismatch);
SYSID_DEFINE_ERROR(InvalidArgument);
SYSID_DEFINE_ERROR(SpectralRadiusNotStrictlyStable);
SYSID_DEFINE_ERROR(NoiseBoundViolation);
SYSID_DEFINE_ERROR(IndexUnderflow);
SYSID_DEFINE_ERROR(RankDeficient);
SYSID_DEFINE_ERROR(InsufficientMarkovLength);
SYSID_DEFINE_ERROR(RankGap);
SYSID_DEFINE_ERROR(NonRealCoefficients);
SYSID_DEFINE_ERROR(NotStronglyObservable);
SYSID_DEFINE_ERROR(SingularSimilarity);
SYSID_DEFINE_ERROR(ParseError);

#undef SYSID_DEFINE_ERROR

}  // namespace sysid
