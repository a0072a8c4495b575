#include "mixed_milnor/error.hpp"

namespace mixed_milnor {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::OddModulusExponent: return "OddModulusExponent";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::SupportTooLarge: return "SupportTooLarge";
    case ErrorCode::VanishingSubset: return "VanishingSubset";
    case ErrorCode::NotVanishing: return "NotVanishing";
    case ErrorCode::NotEssentialFace: return "NotEssentialFace";
    case ErrorCode::TruncationOverflow: return "TruncationOverflow";
    case ErrorCode::TruncationExhausted: return "TruncationExhausted";
    case ErrorCode::ArcInsideV: return "ArcInsideV";
    case ErrorCode::BadArc: return "BadArc";
    case ErrorCode::SingularFiber: return "SingularFiber";
    case ErrorCode::AllValuesZero: return "AllValuesZero";
    case ErrorCode::NotStronglyPolar: return "NotStronglyPolar";
    case ErrorCode::NegativeReducedExponent: return "NegativeReducedExponent";
    case ErrorCode::NotSPWHFaceType: return "NotSPWHFaceType";
    case ErrorCode::ZetaIntegrality: return "ZetaIntegrality";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::BadRequest: return "BadRequest";
  }
  return "Unknown";
}

}  // namespace mixed_milnor
