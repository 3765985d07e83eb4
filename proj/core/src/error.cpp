#include "cycperm/error.hpp"

namespace cycperm {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::CharacteristicDividesN: return "CharacteristicDividesN";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroCode: return "ZeroCode";
    case ErrorCode::NotADivisorOfLength: return "NotADivisorOfLength";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::UnknownTag: return "UnknownTag";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::NoPattern: return "NoPattern";
    case ErrorCode::AmbiguousPattern: return "AmbiguousPattern";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> offset) {
  std::string out(error_code_name(code));
  out += ": ";
  out += message;
  if (offset) out += " (at column " + std::to_string(*offset) + ")";
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> offset)
    : std::runtime_error(decorate(code, message, offset)),
      code_(code),
      offset_(offset) {}

}  // namespace cycperm
