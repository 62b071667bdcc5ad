#pragma once

#include <cstddef>
#include <string_view>

namespace qaens {

enum class MetricKind { TokenF1, ExactMatch };

std::string_view to_string(MetricKind kind) noexcept;
/// Accepts "f1", "token_f1", "em", "exact_match" (case-sensitive).
MetricKind parse_metric(std::string_view text);

struct DecodeConfig {
  std::size_t max_span_len = 30;

  void validate() const;
};

struct EnsembleConfig {
  double alpha = 1.0;
  bool normalize_weights = true;
  DecodeConfig decode{};
  MetricKind weight_metric = MetricKind::TokenF1;

  void validate() const;
};

}  // namespace qaens
