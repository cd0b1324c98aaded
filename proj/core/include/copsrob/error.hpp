#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace copsrob {

enum class ErrorCode {
  InvalidArgument,
  DisconnectedGraph,
  SearchSpaceTooLarge,
  NotIsometric,
  SizeCap,
  BadBox,
  ParseError,
  NonSymmetricInput,
  StateBudgetExceeded,
  IllegalMove,
  NotATree,
  CoverageGap,
  RetractInvalid,
  TooFewCops,
  SubcubeTooLarge,
  PackingImpossible,
  LayerHallFailure,
  DomainError,
  NoBalancedLevel,
  TeamBudgetExceeded,
  ProgressStall,
  AmbiguousRegime,
  UnknownSuite,
  UnknownPolicy,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for errors caused by bad user input rather than by a computation
/// running out of room or a strategy failing at runtime.
bool is_validation_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace copsrob
