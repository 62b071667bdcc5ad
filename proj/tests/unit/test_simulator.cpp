#include <doctest.h>

#include <cmath>

#include "qaens/decoder.hpp"
#include "qaens/errors.hpp"
#include "qaens/metrics.hpp"
#include "qaens/pipeline.hpp"
#include "qaens/simulator.hpp"

using namespace qaens;

namespace {

SimConfig one_domain(std::size_t count, std::vector<std::pair<std::string, double>> models) {
  SimConfig cfg;
  cfg.seed = 5;
  cfg.skill.noise_seed = 6;
  cfg.domains = {{"d", count}};
  for (const auto& [m, s] : models) {
    cfg.models.push_back(m);
    cfg.skill.skills[m]["d"] = s;
  }
  return cfg;
}

double accuracy(const Dataset& ds, const PredictionSet& set) {
  return evaluate_answers(decode_model(ds, set, {}), ds).f1;
}

}  // namespace

TEST_CASE("generate_corpus plants a contiguous gold span") {
  auto cfg = one_domain(1, {});
  cfg.context_len_range = {5, 5};
  cfg.answer_len_range = {2, 2};
  const auto corpus = generate_corpus(cfg);
  const auto& ex = corpus.at("d").examples().at(0);
  const auto tokens = whitespace_tokens(ex.context());
  CHECK(tokens.size() == 5);
  REQUIRE(ex.gold_answers().size() == 1);
  const auto& gold = ex.gold_answers()[0];
  CHECK(whitespace_tokens(gold).size() == 2);
  CHECK(ex.context().find(gold) != std::string::npos);
  CHECK(generate_corpus(cfg) == corpus);
}

TEST_CASE("generate_corpus rejects bad ranges") {
  auto cfg = one_domain(1, {});
  cfg.context_len_range = {5, 5};
  cfg.answer_len_range = {6, 6};
  try {
    generate_corpus(cfg);
    FAIL("expected InvalidRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidRange);
  }
  cfg.answer_len_range = {3, 2};
  CHECK_THROWS_AS(generate_corpus(cfg), Error);
}

TEST_CASE("generate_predictions errors") {
  auto cfg = one_domain(3, {{"m1", 0.5}});
  const auto corpus = generate_corpus(cfg);
  cfg.skill.skills.clear();
  try {
    generate_predictions(corpus, cfg);
    FAIL("expected ConfigMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigMismatch);
  }
  auto bigger = one_domain(4, {{"m1", 0.5}});
  try {
    generate_predictions(corpus, bigger);
    FAIL("expected ConfigMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigMismatch);
  }
}

TEST_CASE("perfect and hopeless models") {
  auto cfg = one_domain(400, {{"perfect", 1.0}, {"hopeless", 0.0}});
  cfg.context_len_range = {30, 60};
  cfg.answer_len_range = {2, 2};
  const auto corpus = generate_corpus(cfg);
  const auto preds = generate_predictions(corpus, cfg);
  const auto& ds = corpus.at("d");
  CHECK(accuracy(ds, preds.at("perfect").at("d")) == 1.0);
  CHECK(accuracy(ds, preds.at("hopeless").at("d")) < 0.05);
}

TEST_CASE("generated predictions validate, share tokens, and are deterministic") {
  auto cfg = one_domain(150, {{"m1", 0.5}, {"m2", 0.7}});
  const auto corpus = generate_corpus(cfg);
  const auto preds = generate_predictions(corpus, cfg);
  const auto& ds = corpus.at("d");
  for (const auto& e : ds.examples()) {
    const auto& p1 = *preds.at("m1").at("d").find(e.id());
    const auto& p2 = *preds.at("m2").at("d").find(e.id());
    CHECK(validate_prediction(p1, e).dist == p1.dist);
    CHECK(std::abs(stable_sum(p1.dist.start_probs) - 1.0) <= 1e-12);
    CHECK(p1.tokens == p2.tokens);
  }
  CHECK(generate_predictions(corpus, cfg) == preds);
}

TEST_CASE("decoded accuracy tracks skill") {
  // Same skill, different streams: the predictions differ.
  auto cfg = one_domain(2000, {{"a", 0.6}, {"b", 0.6}, {"c", 0.3}});
  const auto corpus = generate_corpus(cfg);
  const auto preds = generate_predictions(corpus, cfg);
  const auto& ds = corpus.at("d");
  CHECK_FALSE(preds.at("a").at("d").predictions() == preds.at("b").at("d").predictions());
  const double a = accuracy(ds, preds.at("a").at("d"));
  const double c = accuracy(ds, preds.at("c").at("d"));
  const double se6 = std::sqrt(0.6 * 0.4 / 2000);
  const double se3 = std::sqrt(0.3 * 0.7 / 2000);
  // F1 can exceed EM slightly when a wrong span overlaps the gold one.
  CHECK(std::abs(a - 0.6) <= 3 * se6 + 0.01);
  CHECK(std::abs(c - 0.3) <= 3 * se3 + 0.01);
}

TEST_CASE("equal skills give statistically equal accuracy") {
  // |a - b| ~ |N(0, 2pq/n)|: within 0.03 (about 1.94 sd) for ~95% of corpora.
  int within = 0;
  double sum_abs = 0.0;
  const int runs = 20;
  for (int k = 0; k < runs; ++k) {
    auto cfg = one_domain(2000, {{"a", 0.6}, {"b", 0.6}});
    cfg.seed = 100 + static_cast<std::uint64_t>(k);
    cfg.skill.noise_seed = 200 + static_cast<std::uint64_t>(k);
    const auto corpus = generate_corpus(cfg);
    const auto preds = generate_predictions(corpus, cfg);
    const auto& ds = corpus.at("d");
    const double diff = std::abs(accuracy(ds, preds.at("a").at("d")) - accuracy(ds, preds.at("b").at("d")));
    within += diff <= 0.03;
    sum_abs += diff;
  }
  const double sd = std::sqrt(2 * 0.6 * 0.4 / 2000);
  // Binomial(20, 0.95) falls below 17 with probability < 2%.
  CHECK(within >= 17);
  // E|N(0, sd^2)| = sd * sqrt(2 / pi); the run mean has sd about 0.6 * sd / sqrt(20).
  CHECK(std::abs(sum_abs / runs - sd * std::sqrt(2 / M_PI)) <= 3 * 0.6 * sd / std::sqrt(runs));
}

TEST_CASE("robustness_scenario skill layout") {
  const auto sc = robustness_scenario(3);
  CHECK(sc.config.models.size() == 5);
  CHECK(sc.calibration_domains.size() == 3);
  CHECK(sc.test_domains.size() == 4);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& m = sc.config.models[i];
    for (std::size_t h = 0; h < 5; ++h) {
      CHECK(sc.config.skill.at(m, sc.home_domains[h]) == (h == i ? 0.85 : 0.25));
    }
    for (const auto* group : {&sc.calibration_domains, &sc.test_domains}) {
      for (const auto& d : *group) {
        const double s = sc.config.skill.at(m, d);
        CHECK(s >= 0.2);
        CHECK(s <= 0.6);
      }
    }
  }
  CHECK_NOTHROW(sc.config.validate());
}
