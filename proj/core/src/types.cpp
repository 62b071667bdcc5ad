#include "qaens/types.hpp"

#include <cmath>
#include <set>

#include "qaens/errors.hpp"
#include "qaens/utf8.hpp"

namespace qaens {

Example::Example(std::string id, std::string question, std::string context,
                 std::vector<std::string> gold_answers)
    : id_(std::move(id)),
      question_(std::move(question)),
      context_(std::move(context)),
      gold_answers_(std::move(gold_answers)) {
  if (id_.empty()) fail(ErrorCode::SchemaViolation, "example id must be non-empty");
  if (gold_answers_.empty()) {
    fail(ErrorCode::SchemaViolation, "example '" + id_ + "' has no gold answers");
  }
  for (const auto& answer : gold_answers_) {
    if (answer.empty()) {
      fail(ErrorCode::SchemaViolation, "example '" + id_ + "' has an empty gold answer");
    }
  }
  try {
    boundaries_ = utf8::boundaries(context_);
  } catch (const Error& err) {
    fail(ErrorCode::SchemaViolation, "example '" + id_ + "' context: " + err.what());
  }
}

std::string_view Example::context_slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > context_length()) {
    fail(ErrorCode::OffsetOutOfRange, "context slice [" + std::to_string(begin) + ", " +
                                          std::to_string(end) + ") outside example '" + id_ + "'");
  }
  const auto from = boundaries_[begin];
  return std::string_view(context_).substr(from, boundaries_[end] - from);
}

Dataset::Dataset(std::string name, std::vector<Example> examples)
    : name_(std::move(name)), examples_(std::move(examples)) {
  index_.reserve(examples_.size());
  for (std::size_t i = 0; i < examples_.size(); ++i) {
    if (!index_.emplace(examples_[i].id(), i).second) {
      fail(ErrorCode::DuplicateExampleId,
           "duplicate example id '" + examples_[i].id() + "' in dataset '" + name_ + "'");
    }
  }
}

const Example* Dataset::find(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &examples_[it->second];
}

void PredictionSet::add(ModelPrediction prediction) {
  if (prediction.model_id != model_id_) {
    fail(ErrorCode::SchemaViolation, "prediction for model '" + prediction.model_id +
                                         "' added to set of model '" + model_id_ + "'");
  }
  auto key = prediction.example_id;
  if (!predictions_.emplace(std::move(key), std::move(prediction)).second) {
    fail(ErrorCode::DuplicateExampleId,
         "model '" + model_id_ + "' has two predictions for one example id");
  }
}

const ModelPrediction* PredictionSet::find(std::string_view example_id) const {
  const auto it = predictions_.find(example_id);
  return it == predictions_.end() ? nullptr : &it->second;
}

void RunManifest::validate() const {
  if (base_model_ids.empty()) fail(ErrorCode::InvalidArgument, "manifest needs at least one base model");
  if (calibration_dataset_names.empty()) {
    fail(ErrorCode::InvalidArgument, "manifest needs at least one calibration dataset");
  }
  std::set<std::string_view> seen;
  for (const auto& id : base_model_ids) {
    if (!seen.insert(id).second) fail(ErrorCode::InvalidArgument, "duplicate base model id '" + id + "'");
  }
  config.validate();
}

double stable_sum(std::span<const double> values) noexcept {
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

namespace {

void normalize_vector(std::vector<double>& probs, const char* which, const ModelPrediction& p) {
  for (double v : probs) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      fail(ErrorCode::NegativeProbability, std::string(which) + " probabilities of model '" +
                                               p.model_id + "' on '" + p.example_id +
                                               "' contain a negative or non-finite value");
    }
  }
  const double mass = stable_sum(probs);
  if (std::abs(mass - 1.0) > kIngestTolerance) {
    fail(ErrorCode::DistributionSumOutOfTolerance,
         std::string(which) + " probabilities of model '" + p.model_id + "' on '" + p.example_id +
             "' sum to " + std::to_string(mass));
  }
  if (std::abs(mass - 1.0) <= kStoredTolerance) return;
  for (double& v : probs) v /= mass;
}

}  // namespace

ModelPrediction validate_prediction(ModelPrediction p, const Example& e) {
  const auto where = [&] { return "model '" + p.model_id + "' on example '" + e.id() + "'"; };
  const std::size_t n = p.tokens.size();
  if (p.dist.start_probs.size() != n || p.dist.end_probs.size() != n) {
    fail(ErrorCode::LengthMismatch, where() + ": " + std::to_string(n) + " tokens but " +
                                        std::to_string(p.dist.start_probs.size()) + "/" +
                                        std::to_string(p.dist.end_probs.size()) +
                                        " start/end probabilities");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Token& t = p.tokens[i];
    if (t.char_start >= t.char_end || t.char_end > e.context_length()) {
      fail(ErrorCode::OffsetOutOfRange, where() + ": token " + std::to_string(i) + " [" +
                                            std::to_string(t.char_start) + ", " +
                                            std::to_string(t.char_end) + ") outside context of length " +
                                            std::to_string(e.context_length()));
    }
    if (i > 0 && p.tokens[i - 1].char_end > t.char_start) {
      fail(ErrorCode::NonMonotoneTokens, where() + ": token " + std::to_string(i) +
                                             " starts before token " + std::to_string(i - 1) + " ends");
    }
  }
  normalize_vector(p.dist.start_probs, "start", p);
  normalize_vector(p.dist.end_probs, "end", p);
  return p;
}

std::string span_to_text(const Example& e, std::span<const Token> tokens, Span span) {
  if (span.start > span.end || span.end >= tokens.size()) {
    fail(ErrorCode::SpanOutOfRange, "span (" + std::to_string(span.start) + ", " +
                                        std::to_string(span.end) + ") invalid for " +
                                        std::to_string(tokens.size()) + " tokens");
  }
  return std::string(e.context_slice(tokens[span.start].char_start, tokens[span.end].char_end));
}

}  // namespace qaens
