#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mixed_milnor {

// Machine-readable failure categories. The CLI prints the name verbatim.
enum class ErrorCode {
  SyntaxError,
  OddModulusExponent,
  IndexOutOfRange,
  ZeroPolynomial,
  TooManyVariables,
  SupportTooLarge,
  VanishingSubset,
  NotVanishing,
  NotEssentialFace,
  TruncationOverflow,
  TruncationExhausted,
  ArcInsideV,
  BadArc,
  SingularFiber,
  AllValuesZero,
  NotStronglyPolar,
  NegativeReducedExponent,
  NotSPWHFaceType,
  ZetaIntegrality,
  DimensionMismatch,
  UnknownName,
  BadParams,
  BadRequest,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure with the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& expected)
      : Error(ErrorCode::SyntaxError,
              "syntax error at position " + std::to_string(position) +
                  ": expected " + expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace mixed_milnor
