#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cycperm {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  FieldMismatch,
  DivisionByZero,
  CharacteristicDividesN,
  NotADivisor,
  LengthMismatch,
  TooLarge,
  ZeroCode,
  NotADivisorOfLength,
  InvalidPermutation,
  EmptyGenerators,
  NotCoprime,
  UnknownTag,
  BadDegree,
  SyntaxError,
  ArityError,
  NoPattern,
  AmbiguousPattern,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this one exception type; the
// code is stable and meant to be matched on, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  // Set for SyntaxError: 1-based column of the offending byte.
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

}  // namespace cycperm
