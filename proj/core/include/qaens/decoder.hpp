#pragma once

#include <string>

#include "qaens/config.hpp"
#include "qaens/types.hpp"

namespace qaens {

/// Span maximizing start[i] * end[j] with i <= j <= i + max_span_len - 1.
/// Ties go to the smallest i, then the smallest j. Throws EmptyDistribution.
Span decode_span(const SpanDistribution& d, const DecodeConfig& cfg);

std::string decode_to_text(const Example& e, const ModelPrediction& p, const DecodeConfig& cfg);

}  // namespace qaens
