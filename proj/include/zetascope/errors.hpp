#pragma once

#include <stdexcept>
#include <string>

namespace zs {

/// Base class for every error this library throws. Domain violations are
/// typed errors, never NaN propagation: residual checks must fail loudly.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define ZS_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                   \
  public:                                                       \
    explicit Name(const std::string& what) : Error(what) {}     \
  }

// numerics
ZS_DEFINE_ERROR(PoleError);
ZS_DEFINE_ERROR(OverflowError);
ZS_DEFINE_ERROR(DomainError);
ZS_DEFINE_ERROR(PrecisionError);

// zeta-core
ZS_DEFINE_ERROR(NearZeroError);
ZS_DEFINE_ERROR(PathThroughZeroError);

// zeros-and-s
ZS_DEFINE_ERROR(MissedZeroSuspected);
ZS_DEFINE_ERROR(ParseError);
ZS_DEFINE_ERROR(OrderError);
ZS_DEFINE_ERROR(SanityError);
ZS_DEFINE_ERROR(HeightExceededError);
ZS_DEFINE_ERROR(CParameterError);

// explicit-formula
ZS_DEFINE_ERROR(CutoffOverflowError);
ZS_DEFINE_ERROR(TableTooShortError);
ZS_DEFINE_ERROR(QuadratureError);

// euler-product
ZS_DEFINE_ERROR(LimitError);
ZS_DEFINE_ERROR(CutoffError);

// explorer-cli
ZS_DEFINE_ERROR(ConfigError);
ZS_DEFINE_ERROR(IoError);

#undef ZS_DEFINE_ERROR

}  // namespace zs
