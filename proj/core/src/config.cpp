#include "qaens/config.hpp"

#include <cmath>
#include <string>

#include "qaens/errors.hpp"

namespace qaens {

std::string_view to_string(MetricKind kind) noexcept {
  return kind == MetricKind::TokenF1 ? "f1" : "em";
}

MetricKind parse_metric(std::string_view text) {
  if (text == "f1" || text == "token_f1") return MetricKind::TokenF1;
  if (text == "em" || text == "exact_match") return MetricKind::ExactMatch;
  fail(ErrorCode::InvalidArgument, "unknown metric '" + std::string(text) + "' (expected f1 or em)");
}

void DecodeConfig::validate() const {
  if (max_span_len < 1) fail(ErrorCode::InvalidArgument, "max_span_len must be >= 1");
}

void EnsembleConfig::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    fail(ErrorCode::InvalidArgument, "alpha must be a finite positive number");
  }
  decode.validate();
}

}  // namespace qaens
