#include "qaens/simulator.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include "qaens/errors.hpp"
#include "qaens/random.hpp"

namespace qaens {

double SkillMatrix::at(const std::string& model, const std::string& domain) const {
  const auto m = skills.find(model);
  if (m != skills.end()) {
    const auto d = m->second.find(domain);
    if (d != m->second.end()) return d->second;
  }
  fail(ErrorCode::ConfigMismatch, "no skill for model '" + model + "' on domain '" + domain + "'");
}

void SimConfig::validate() const {
  const auto [ctx_min, ctx_max] = context_len_range;
  const auto [ans_min, ans_max] = answer_len_range;
  if (ctx_min < 1 || ctx_min > ctx_max) fail(ErrorCode::InvalidRange, "context_len_range is empty");
  if (ans_min < 1 || ans_min > ans_max) fail(ErrorCode::InvalidRange, "answer_len_range is empty");
  if (ans_max > ctx_min) {
    fail(ErrorCode::InvalidRange, "answer_len_range max exceeds context_len_range min");
  }
  if (vocab_size < 1) fail(ErrorCode::InvalidArgument, "vocab_size must be >= 1");
  if (!(skill.sharpness > 0.0) || !std::isfinite(skill.sharpness)) {
    fail(ErrorCode::InvalidArgument, "sharpness must be finite and > 0");
  }
  if (domains.empty()) fail(ErrorCode::InvalidArgument, "no domains configured");
  std::set<std::string_view> names;
  for (const auto& d : domains) {
    if (d.name.empty()) fail(ErrorCode::InvalidArgument, "domain name must be non-empty");
    if (d.count < 1) fail(ErrorCode::InvalidArgument, "domain '" + d.name + "' needs count >= 1");
    if (!names.insert(d.name).second) fail(ErrorCode::InvalidArgument, "duplicate domain '" + d.name + "'");
  }
  std::set<std::string_view> model_names;
  for (const auto& m : models) {
    if (m.empty()) fail(ErrorCode::InvalidArgument, "model id must be non-empty");
    if (!model_names.insert(m).second) fail(ErrorCode::InvalidArgument, "duplicate model '" + m + "'");
    for (const auto& d : domains) {
      const double s = skill.at(m, d.name);
      if (!(s >= 0.0 && s <= 1.0)) {
        fail(ErrorCode::InvalidArgument, "skill of '" + m + "' on '" + d.name + "' outside [0, 1]");
      }
    }
  }
}

namespace {

std::string render_word(char prefix, std::uint64_t index) {
  std::string word(1, prefix);
  // Two letters minimum so no word is shorter than three characters.
  std::string digits;
  do {
    digits.push_back(static_cast<char>('a' + index % 26));
    index /= 26;
  } while (index > 0 || digits.size() < 2);
  word.append(digits.rbegin(), digits.rend());
  return word;
}

std::string example_id(const std::string& domain, std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%06zu", k);
  return domain + "-" + buf;
}

std::uint64_t example_seed(std::uint64_t seed, const std::string& domain, std::size_t k) {
  return derive_seed(derive_seed(seed, domain), static_cast<std::uint64_t>(k));
}

// Gold span of a generated example, recovered from its answer-vocabulary words.
Span gold_span(const std::vector<Token>& tokens) {
  std::size_t first = tokens.size();
  std::size_t last = 0;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    if (tokens[t].text.front() == 'q') {
      first = std::min(first, t);
      last = t;
    }
  }
  if (first == tokens.size()) fail(ErrorCode::ConfigMismatch, "example has no planted answer");
  return {first, last};
}

Span wrong_span(const Span& gold, std::size_t n_tokens, const SimConfig& cfg, Rng& rng) {
  std::vector<Span> disjoint;
  std::vector<Span> other;
  for (std::size_t len = cfg.answer_len_range.first; len <= cfg.answer_len_range.second; ++len) {
    if (len > n_tokens) break;
    for (std::size_t s = 0; s + len <= n_tokens; ++s) {
      const Span cand{s, s + len - 1};
      if (cand.end < gold.start || cand.start > gold.end) {
        disjoint.push_back(cand);
      } else if (!(cand == gold)) {
        other.push_back(cand);
      }
    }
  }
  const auto& pick = disjoint.empty() ? other : disjoint;
  if (pick.empty()) return gold;  // the gold span is the only span there is
  return pick[static_cast<std::size_t>(rng.below(pick.size()))];
}

std::vector<double> peaked(std::size_t n, std::size_t peak, double sharpness) {
  const double denom = static_cast<double>(n) + sharpness;
  std::vector<double> probs(n, 1.0 / denom);
  probs[peak] = (1.0 + sharpness) / denom;
  return probs;
}

}  // namespace

std::vector<Token> whitespace_tokens(const std::string& context) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < context.size()) {
    while (i < context.size() && context[i] == ' ') ++i;
    std::size_t j = i;
    while (j < context.size() && context[j] != ' ') ++j;
    if (j > i) tokens.push_back({context.substr(i, j - i), i, j});
    i = j;
  }
  return tokens;
}

std::map<std::string, Dataset> generate_corpus(const SimConfig& cfg) {
  cfg.validate();
  std::map<std::string, Dataset> corpus;
  for (const auto& domain : cfg.domains) {
    std::vector<Example> examples;
    examples.reserve(domain.count);
    for (std::size_t k = 0; k < domain.count; ++k) {
      Rng rng(example_seed(cfg.seed, domain.name, k));
      const auto n = static_cast<std::size_t>(rng.between(
          static_cast<std::int64_t>(cfg.context_len_range.first), static_cast<std::int64_t>(cfg.context_len_range.second)));
      const auto len = static_cast<std::size_t>(rng.between(
          static_cast<std::int64_t>(cfg.answer_len_range.first), static_cast<std::int64_t>(cfg.answer_len_range.second)));
      const auto pos = static_cast<std::size_t>(rng.below(n - len + 1));
      std::string context;
      std::string answer;
      for (std::size_t t = 0; t < n; ++t) {
        const bool in_answer = t >= pos && t < pos + len;
        const auto word = render_word(in_answer ? 'q' : 'k', rng.below(cfg.vocab_size));
        if (t > 0) context.push_back(' ');
        context += word;
        if (in_answer) {
          if (!answer.empty()) answer.push_back(' ');
          answer += word;
        }
      }
      auto id = example_id(domain.name, k);
      auto question = "synthetic question " + id;
      examples.emplace_back(std::move(id), std::move(question), std::move(context),
                            std::vector<std::string>{std::move(answer)});
    }
    corpus.emplace(domain.name, Dataset(domain.name, std::move(examples)));
  }
  return corpus;
}

std::map<std::string, std::map<std::string, PredictionSet>> generate_predictions(
    const std::map<std::string, Dataset>& corpus, const SimConfig& cfg) {
  cfg.validate();
  std::map<std::string, std::map<std::string, PredictionSet>> out;
  for (const auto& model : cfg.models) {
    const std::uint64_t model_seed = derive_seed(cfg.skill.noise_seed, model);
    auto& per_domain = out[model];
    for (const auto& domain : cfg.domains) {
      const auto it = corpus.find(domain.name);
      if (it == corpus.end() || it->second.size() != domain.count) {
        fail(ErrorCode::ConfigMismatch, "corpus does not match domain '" + domain.name + "'");
      }
      const double skill = cfg.skill.at(model, domain.name);
      PredictionSet set(model);
      for (std::size_t k = 0; k < domain.count; ++k) {
        const Example& e = it->second.examples()[k];
        if (e.id() != example_id(domain.name, k)) {
          fail(ErrorCode::ConfigMismatch, "unexpected example id '" + e.id() + "'");
        }
        Rng rng(example_seed(model_seed, domain.name, k));
        auto tokens = whitespace_tokens(e.context());
        const Span gold = gold_span(tokens);
        const bool correct = rng.uniform01() < skill;
        const Span target = correct ? gold : wrong_span(gold, tokens.size(), cfg, rng);
        SpanDistribution dist{peaked(tokens.size(), target.start, cfg.skill.sharpness),
                              peaked(tokens.size(), target.end, cfg.skill.sharpness)};
        set.add({model, e.id(), std::move(tokens), std::move(dist)});
      }
      per_domain.emplace(domain.name, std::move(set));
    }
  }
  return out;
}

Scenario robustness_scenario(std::uint64_t seed, const ScenarioShape& shape) {
  Scenario sc;
  auto& cfg = sc.config;
  cfg.seed = derive_seed(seed, "corpus");
  cfg.skill.noise_seed = derive_seed(seed, "noise");
  for (std::size_t i = 0; i < shape.n_models; ++i) {
    cfg.models.push_back("model" + std::to_string(i + 1));
    sc.home_domains.push_back("home" + std::to_string(i + 1));
    cfg.domains.push_back({sc.home_domains.back(), shape.home_count});
  }
  for (std::size_t i = 0; i < shape.n_calibration; ++i) {
    sc.calibration_domains.push_back("calib" + std::to_string(i + 1));
    cfg.domains.push_back({sc.calibration_domains.back(), shape.calibration_count});
  }
  for (std::size_t i = 0; i < shape.n_test; ++i) {
    sc.test_domains.push_back("test" + std::to_string(i + 1));
    cfg.domains.push_back({sc.test_domains.back(), shape.test_count});
  }

  Rng rng(derive_seed(seed, "skills"));
  const double width = shape.ood_max - shape.ood_min;
  for (std::size_t i = 0; i < shape.n_models; ++i) {
    auto& row = cfg.skill.skills[cfg.models[i]];
    for (std::size_t h = 0; h < shape.n_models; ++h) {
      row[sc.home_domains[h]] = h == i ? shape.home_skill : shape.away_skill;
    }
    const double trait = rng.uniform01();
    for (const auto* group : {&sc.calibration_domains, &sc.test_domains}) {
      for (const auto& d : *group) {
        const double local = rng.uniform01();
        row[d] = shape.ood_min + width * (shape.trait_share * trait + (1.0 - shape.trait_share) * local);
      }
    }
  }
  return sc;
}

}  // namespace qaens
