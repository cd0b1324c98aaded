#include "copsrob/error.hpp"

namespace copsrob {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::NotIsometric: return "NotIsometric";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::BadBox: return "BadBox";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonSymmetricInput: return "NonSymmetricInput";
    case ErrorCode::StateBudgetExceeded: return "StateBudgetExceeded";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::CoverageGap: return "CoverageGap";
    case ErrorCode::RetractInvalid: return "RetractInvalid";
    case ErrorCode::TooFewCops: return "TooFewCops";
    case ErrorCode::SubcubeTooLarge: return "SubcubeTooLarge";
    case ErrorCode::PackingImpossible: return "PackingImpossible";
    case ErrorCode::LayerHallFailure: return "LayerHallFailure";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NoBalancedLevel: return "NoBalancedLevel";
    case ErrorCode::TeamBudgetExceeded: return "TeamBudgetExceeded";
    case ErrorCode::ProgressStall: return "ProgressStall";
    case ErrorCode::AmbiguousRegime: return "AmbiguousRegime";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::UnknownPolicy: return "UnknownPolicy";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::ParseError:
    case ErrorCode::NonSymmetricInput:
    case ErrorCode::SizeCap:
    case ErrorCode::BadBox:
    case ErrorCode::DomainError:
    case ErrorCode::UnknownSuite:
    case ErrorCode::UnknownPolicy:
    case ErrorCode::NotATree:
    case ErrorCode::TooFewCops:
    case ErrorCode::AmbiguousRegime:
    case ErrorCode::Io:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace copsrob
