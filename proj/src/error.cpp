#include "hmstab/error.hpp"

namespace hmstab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::VerificationFailure: return "VerificationFailure";
    case ErrorCode::DegenerateSamples: return "DegenerateSamples";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::NotWeaklyPseudostable: return "NotWeaklyPseudostable";
    case ErrorCode::GenusMismatch: return "GenusMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnsupportedNu: return "UnsupportedNu";
    case ErrorCode::PossiblySpecial: return "PossiblySpecial";
    case ErrorCode::Divisibility: return "Divisibility";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::MalformedFiltration: return "MalformedFiltration";
    case ErrorCode::NotMonomialTail: return "NotMonomialTail";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidCurve: return "InvalidCurve";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hmstab
