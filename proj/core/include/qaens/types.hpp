#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qaens/config.hpp"

namespace qaens {

/// A context token. Offsets count Unicode scalar values, half-open.
struct Token {
  std::string text;
  std::size_t char_start = 0;
  std::size_t char_end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Inclusive token span [start, end].
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

/// One QA instance. The context is kept as UTF-8 together with its code point
/// boundaries so token offsets can be mapped back to bytes in O(1).
class Example {
 public:
  Example(std::string id, std::string question, std::string context,
          std::vector<std::string> gold_answers);

  const std::string& id() const noexcept { return id_; }
  const std::string& question() const noexcept { return question_; }
  const std::string& context() const noexcept { return context_; }
  const std::vector<std::string>& gold_answers() const noexcept { return gold_answers_; }

  /// Context length in code points.
  std::size_t context_length() const noexcept { return boundaries_.size() - 1; }
  /// Context substring covering code points [begin, end).
  std::string_view context_slice(std::size_t begin, std::size_t end) const;

  friend bool operator==(const Example& a, const Example& b) {
    return a.id_ == b.id_ && a.question_ == b.question_ && a.context_ == b.context_ &&
           a.gold_answers_ == b.gold_answers_;
  }

 private:
  std::string id_;
  std::string question_;
  std::string context_;
  std::vector<std::string> gold_answers_;
  std::vector<std::size_t> boundaries_;
};

class Dataset {
 public:
  Dataset() = default;
  /// Throws DuplicateExampleId.
  Dataset(std::string name, std::vector<Example> examples);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Example>& examples() const noexcept { return examples_; }
  std::size_t size() const noexcept { return examples_.size(); }
  bool empty() const noexcept { return examples_.empty(); }

  const Example* find(std::string_view id) const;

  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.name_ == b.name_ && a.examples_ == b.examples_;
  }

 private:
  std::string name_;
  std::vector<Example> examples_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct SpanDistribution {
  std::vector<double> start_probs;
  std::vector<double> end_probs;

  std::size_t size() const noexcept { return start_probs.size(); }

  friend bool operator==(const SpanDistribution&, const SpanDistribution&) = default;
};

struct ModelPrediction {
  std::string model_id;
  std::string example_id;
  std::vector<Token> tokens;
  SpanDistribution dist;

  friend bool operator==(const ModelPrediction&, const ModelPrediction&) = default;
};

/// All predictions of one base model on one dataset, keyed by example id.
class PredictionSet {
 public:
  using Map = std::map<std::string, ModelPrediction, std::less<>>;

  PredictionSet() = default;
  explicit PredictionSet(std::string model_id) : model_id_(std::move(model_id)) {}

  const std::string& model_id() const noexcept { return model_id_; }
  const Map& predictions() const noexcept { return predictions_; }
  std::size_t size() const noexcept { return predictions_.size(); }

  /// Throws SchemaViolation on a foreign model id, DuplicateExampleId on reuse.
  void add(ModelPrediction prediction);
  const ModelPrediction* find(std::string_view example_id) const;

  friend bool operator==(const PredictionSet&, const PredictionSet&) = default;

 private:
  std::string model_id_;
  Map predictions_;
};

struct RunManifest {
  std::vector<std::string> base_model_ids;
  std::vector<std::string> calibration_dataset_names;
  std::string target_dataset_name;
  std::uint64_t seed = 0;
  EnsembleConfig config{};

  void validate() const;

  friend bool operator==(const RunManifest& a, const RunManifest& b) {
    return a.base_model_ids == b.base_model_ids &&
           a.calibration_dataset_names == b.calibration_dataset_names &&
           a.target_dataset_name == b.target_dataset_name && a.seed == b.seed &&
           a.config.alpha == b.config.alpha &&
           a.config.normalize_weights == b.config.normalize_weights &&
           a.config.decode.max_span_len == b.config.decode.max_span_len &&
           a.config.weight_metric == b.config.weight_metric;
  }
};

inline constexpr double kIngestTolerance = 1e-3;
inline constexpr double kStoredTolerance = 1e-12;

/// Compensated (Neumaier) sum, accurate to about one ulp of the result.
double stable_sum(std::span<const double> values) noexcept;

/// Checks a prediction against its example and renormalizes both vectors.
/// Idempotent: a distribution whose mass is already within 1e-12 of one is
/// returned untouched.
ModelPrediction validate_prediction(ModelPrediction p, const Example& e);

/// Throws SpanOutOfRange unless span.start <= span.end < tokens.size().
std::string span_to_text(const Example& e, std::span<const Token> tokens, Span span);

}  // namespace qaens
