#include "qaens/errors.hpp"

namespace qaens {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::OffsetOutOfRange: return "OffsetOutOfRange";
    case ErrorCode::NonMonotoneTokens: return "NonMonotoneTokens";
    case ErrorCode::DistributionSumOutOfTolerance: return "DistributionSumOutOfTolerance";
    case ErrorCode::NegativeProbability: return "NegativeProbability";
    case ErrorCode::SpanOutOfRange: return "SpanOutOfRange";
    case ErrorCode::EmptyGoldSet: return "EmptyGoldSet";
    case ErrorCode::MissingPrediction: return "MissingPrediction";
    case ErrorCode::EmptyDistribution: return "EmptyDistribution";
    case ErrorCode::LengthMismatchAcrossModels: return "LengthMismatchAcrossModels";
    case ErrorCode::MissingWeight: return "MissingWeight";
    case ErrorCode::AllWeightsZero: return "AllWeightsZero";
    case ErrorCode::EmptyModelSet: return "EmptyModelSet";
    case ErrorCode::TokenizationMismatch: return "TokenizationMismatch";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::PoolTooSmall: return "PoolTooSmall";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::ConfigMismatch: return "ConfigMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::DuplicateExampleId: return "DuplicateExampleId";
    case ErrorCode::UnknownExampleId: return "UnknownExampleId";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace qaens
