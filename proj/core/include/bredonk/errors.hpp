#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bredonk {

enum class ErrorCode {
  DimensionMismatch,
  NotUnimodular,
  GroupTooLargeOrInfinite,
  InfiniteOrder,
  NotSubconjugate,
  GroupMismatch,
  NonIntegralMultiplicity,
  NonRationalProduct,
  PrimeSearchFailed,
  ChainConditionViolated,
  BoundarySquareNonzero,
  MalformedComplex,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Base of every error thrown by the library. `code()` identifies the failure
/// class so callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define BREDONK_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what)                          \
        : Error(ErrorCode::Name, std::string(#Name ": ") + what) {} \
  }

BREDONK_DEFINE_ERROR(DimensionMismatch);
BREDONK_DEFINE_ERROR(NotUnimodular);
BREDONK_DEFINE_ERROR(GroupTooLargeOrInfinite);
BREDONK_DEFINE_ERROR(InfiniteOrder);
BREDONK_DEFINE_ERROR(NotSubconjugate);
BREDONK_DEFINE_ERROR(GroupMismatch);
BREDONK_DEFINE_ERROR(NonIntegralMultiplicity);
BREDONK_DEFINE_ERROR(NonRationalProduct);
BREDONK_DEFINE_ERROR(PrimeSearchFailed);
BREDONK_DEFINE_ERROR(ChainConditionViolated);
BREDONK_DEFINE_ERROR(BoundarySquareNonzero);
BREDONK_DEFINE_ERROR(MalformedComplex);
BREDONK_DEFINE_ERROR(ParseError);

#undef BREDONK_DEFINE_ERROR

}  // namespace bredonk
