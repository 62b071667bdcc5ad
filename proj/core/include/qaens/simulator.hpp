#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qaens/types.hpp"

namespace qaens {

struct SkillMatrix {
  /// skills[model][domain] in [0, 1]: probability that the model puts its
  /// peak on the gold span for an example of that domain.
  std::map<std::string, std::map<std::string, double>> skills;
  double sharpness = 4.0;
  std::uint64_t noise_seed = 0;

  double at(const std::string& model, const std::string& domain) const;  // throws ConfigMismatch
};

struct DomainSpec {
  std::string name;
  std::size_t count = 0;
};

struct SimConfig {
  std::vector<DomainSpec> domains;
  std::size_t vocab_size = 1000;
  std::pair<std::size_t, std::size_t> context_len_range{30, 80};
  std::pair<std::size_t, std::size_t> answer_len_range{1, 4};
  std::vector<std::string> models;
  SkillMatrix skill;
  std::uint64_t seed = 0;

  /// Throws InvalidRange for bad length ranges, ConfigMismatch for a missing
  /// skill entry, InvalidArgument otherwise.
  void validate() const;
};

/// Synthetic contexts are single-space-joined words. Words inside the gold
/// span come from the answer vocabulary ("q" + letters), all other words from
/// the context vocabulary ("k" + letters), so a span that does not overlap the
/// gold positions shares no word with the gold answer.
std::map<std::string, Dataset> generate_corpus(const SimConfig& cfg);

/// Per (model, domain, example) an independent stream decides whether the
/// model is right (probability skills[model][domain]). The chosen target span
/// (gold, or a uniformly drawn wrong span avoiding the gold positions when one
/// exists) gets weight 1 + sharpness at its start and end tokens, every other
/// token weight 1, and both vectors are divided by T + sharpness. The target
/// therefore strictly wins decoding whenever it fits in max_span_len.
std::map<std::string, std::map<std::string, PredictionSet>> generate_predictions(
    const std::map<std::string, Dataset>& corpus, const SimConfig& cfg);

/// Word-boundary tokens of a single-space-joined ASCII context.
std::vector<Token> whitespace_tokens(const std::string& context);

struct ScenarioShape {
  std::size_t n_models = 5;
  std::size_t n_calibration = 3;
  std::size_t n_test = 4;
  std::size_t home_count = 500;
  std::size_t calibration_count = 2000;
  std::size_t test_count = 2000;
  double home_skill = 0.85;
  double away_skill = 0.25;
  double ood_min = 0.2;
  double ood_max = 0.6;
  /// Share of a model's out-of-domain skill that is a per-model trait; the
  /// rest varies per domain.
  double trait_share = 0.75;
};

struct Scenario {
  SimConfig config;
  std::vector<std::string> home_domains;
  std::vector<std::string> calibration_domains;
  std::vector<std::string> test_domains;
};

/// Multi-domain benchmark: model i is strong on home domain i and weak on the
/// other homes; on calibration and test domains its skill is
///   ood_min + (ood_max - ood_min) * (trait_share * u_model + (1 - trait_share) * v_model_domain)
/// with u, v uniform on [0, 1) drawn from the seed.
Scenario robustness_scenario(std::uint64_t seed, const ScenarioShape& shape = {});

}  // namespace qaens
