#include "qaens/decoder.hpp"

#include <algorithm>

#include "qaens/errors.hpp"

namespace qaens {

Span decode_span(const SpanDistribution& d, const DecodeConfig& cfg) {
  cfg.validate();
  const std::size_t n = d.size();
  if (n == 0) fail(ErrorCode::EmptyDistribution, "cannot decode an empty distribution");
  if (d.end_probs.size() != n) {
    fail(ErrorCode::LengthMismatch, "start/end probability vectors differ in length");
  }
  Span best{0, 0};
  double best_score = d.start_probs[0] * d.end_probs[0];
  for (std::size_t i = 0; i < n; ++i) {
    const double s = d.start_probs[i];
    const std::size_t last = std::min(n - 1, i + cfg.max_span_len - 1);
    for (std::size_t j = i; j <= last; ++j) {
      const double score = s * d.end_probs[j];
      if (score > best_score) {
        best_score = score;
        best = {i, j};
      }
    }
  }
  return best;
}

std::string decode_to_text(const Example& e, const ModelPrediction& p, const DecodeConfig& cfg) {
  return span_to_text(e, p.tokens, decode_span(p.dist, cfg));
}

}  // namespace qaens
