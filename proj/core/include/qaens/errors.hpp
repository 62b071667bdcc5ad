#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qaens {

enum class ErrorCode {
  // qa-core
  LengthMismatch,
  OffsetOutOfRange,
  NonMonotoneTokens,
  DistributionSumOutOfTolerance,
  NegativeProbability,
  SpanOutOfRange,
  // metrics
  EmptyGoldSet,
  MissingPrediction,
  // decoder
  EmptyDistribution,
  // ensemble
  LengthMismatchAcrossModels,
  MissingWeight,
  AllWeightsZero,
  EmptyModelSet,
  TokenizationMismatch,
  // weighting
  EmptyDataset,
  PoolTooSmall,
  // simulator
  InvalidRange,
  ConfigMismatch,
  // io
  ParseError,
  SchemaViolation,
  DuplicateExampleId,
  UnknownExampleId,
  IoError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the toolkit carries one of the codes above so the
/// CLI can map it onto an exit status and a machine-readable record.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace qaens
