#include <doctest.h>

#include <nlohmann/json.hpp>

#include "../cli_harness.hpp"
#include "qaens/io.hpp"

using namespace qaens;
using namespace qaens::testing;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kTmp = QAENS_TEST_TMP;

// Three domains, three models; small enough to run in well under a second.
std::string small_sim_config() {
  return R"({
  "seed": 5, "noise_seed": 6, "sharpness": 4, "vocab_size": 200,
  "context_len": [20, 40], "answer_len": [1, 3],
  "domains": [{"name": "c1", "count": 120}, {"name": "c2", "count": 80}, {"name": "t", "count": 100}],
  "models": ["m1", "m2", "m3"],
  "skills": {
    "m1": {"c1": 0.7, "c2": 0.6, "t": 0.65},
    "m2": {"c1": 0.4, "c2": 0.5, "t": 0.45},
    "m3": {"c1": 0.2, "c2": 0.3, "t": 0.25}
  },
  "calibration": ["c1", "c2"],
  "targets": ["t"]
})";
}

fs::path simulate_small(const std::string& name) {
  const auto dir = scratch(kTmp, name);
  spit(dir / "sim.json", small_sim_config());
  const auto r = run_cli({"simulate", "--config", (dir / "sim.json").string(), "--out-dir", (dir / "out").string()});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return dir / "out";
}

std::string ds(const fs::path& root, const std::string& d) { return (root / "datasets" / (d + ".jsonl")).string(); }
std::string pr(const fs::path& root, const std::string& m, const std::string& d) {
  return (root / "predictions" / m / (d + ".jsonl")).string();
}

}  // namespace

TEST_CASE("simulate writes the expected tree") {
  const auto root = simulate_small("cli_tree");
  for (const auto* d : {"c1", "c2", "t"}) CHECK(fs::exists(ds(root, d)));
  CHECK(fs::exists(pr(root, "m3", "t")));
  CHECK(fs::exists(root / "run_t.json"));
  CHECK(fs::exists(root / "sim_config.json"));
}

TEST_CASE("single-model ensemble with weight 1 reproduces evaluate") {
  const auto root = simulate_small("cli_identity");
  const auto eval = run_cli({"evaluate", "--dataset", ds(root, "t"), "--predictions", pr(root, "m2", "t"),
                             "--answers-out", (root / "eval_answers.jsonl").string()});
  REQUIRE_MESSAGE(eval.code == 0, eval.err);

  io::WeightsFile w;
  w.meta.models = {"m2"};
  w.weights.entries = {{"m2", 1.0}};
  io::save_weights(root / "w.jsonl", w);
  const auto ens = run_cli({"ensemble", "--dataset", ds(root, "t"), "--predictions", pr(root, "m2", "t"), "--weights",
                            (root / "w.jsonl").string(), "--alpha", "1", "--out",
                            (root / "ens_answers.jsonl").string()});
  REQUIRE_MESSAGE(ens.code == 0, ens.err);

  const auto e = json::parse(eval.out);
  const auto n = json::parse(ens.out);
  CHECK(e["f1"].get<double>() == n["f1"].get<double>());
  CHECK(e["em"].get<double>() == n["em"].get<double>());
  CHECK(slurp(root / "eval_answers.jsonl") == slurp(root / "ens_answers.jsonl"));

  const auto from_answers = run_cli({"evaluate", "--dataset", ds(root, "t"), "--answers", (root / "ens_answers.jsonl").string()});
  REQUIRE(from_answers.code == 0);
  CHECK(json::parse(from_answers.out)["f1"].get<double>() == e["f1"].get<double>());
}

TEST_CASE("weights, alpha and ensemble chain") {
  const auto root = simulate_small("cli_chain");
  std::vector<std::string> cal{"--dataset", "c1=" + ds(root, "c1"), "--dataset", "c2=" + ds(root, "c2")};
  for (const auto* m : {"m1", "m2", "m3"}) {
    for (const auto* d : {"c1", "c2"}) {
      cal.push_back("--predictions");
      cal.push_back(std::string(d) + "=" + pr(root, m, d));
    }
  }
  auto args = cal;
  args.insert(args.begin(), "estimate-weights");
  args.insert(args.end(), {"--seed", "3", "--out", (root / "w.jsonl").string()});
  const auto w = run_cli(args);
  REQUIRE_MESSAGE(w.code == 0, w.err);
  CHECK(w.err.find(R"("event":"pool","size":200)") != std::string::npos);
  const auto weights = io::load_weights(root / "w.jsonl");
  CHECK(weights.meta.models == std::vector<std::string>{"m1", "m2", "m3"});
  CHECK(weights.weights.at("m1") > weights.weights.at("m2"));
  CHECK(weights.weights.at("m2") > weights.weights.at("m3"));

  args = cal;
  args.insert(args.begin(), "tune-alpha");
  args.insert(args.end(), {"--grid", "1,2,3,4", "--folds", "4", "--seed", "3", "--out", (root / "a.json").string()});
  const auto a = run_cli(args);
  REQUIRE_MESSAGE(a.code == 0, a.err);
  const auto printed = json::parse(a.out);
  CHECK(printed["per_alpha_scores"].size() == 4);
  const double alpha = printed["selected_alpha"].get<double>();
  CHECK((alpha == 1 || alpha == 2 || alpha == 3 || alpha == 4));

  const auto e = run_cli({"ensemble", "--dataset", ds(root, "t"), "--predictions", pr(root, "m1", "t"), "--predictions",
                          pr(root, "m2", "t"), "--predictions", pr(root, "m3", "t"), "--weights",
                          (root / "w.jsonl").string(), "--alpha-file", (root / "a.json").string()});
  REQUIRE_MESSAGE(e.code == 0, e.err);
  const auto s = run_cli({"ensemble", "--simple", "--dataset", ds(root, "t"), "--predictions", pr(root, "m1", "t"),
                          "--predictions", pr(root, "m2", "t"), "--predictions", pr(root, "m3", "t")});
  REQUIRE_MESSAGE(s.code == 0, s.err);
  CHECK(json::parse(e.out)["alpha"].get<double>() == alpha);
  CHECK(json::parse(s.out)["method"] == "simple");
}

TEST_CASE("report runs the whole pipeline") {
  const auto root = simulate_small("cli_report");
  const auto r = run_cli({"report", "--manifest", (root / "run_t.json").string(), "--out", (root / "report.json").string()});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  const auto report = io::load_report(root / "report.json");
  CHECK(report.manifest.target_dataset_name == "t");
  CHECK(report.per_model_scores.size() == 3);
  CHECK(report.per_alpha_scores.size() == 4);
  CHECK(report.timing_ms.empty());
  CHECK(report.manifest.config.alpha == report.selected_alpha);

  const auto timed = run_cli({"report", "--manifest", (root / "run_t.json").string(), "--timing"});
  REQUIRE(timed.code == 0);
  CHECK(json::parse(timed.out).contains("timing_ms"));
}

TEST_CASE("validate accepts emitted files and flags broken ones") {
  const auto root = simulate_small("cli_validate");
  const auto ok = run_cli({"validate", "--dataset", "t=" + ds(root, "t"), "--dataset", "c1=" + ds(root, "c1"),
                           "--predictions", "t=" + pr(root, "m1", "t"), "--predictions", "c1=" + pr(root, "m3", "c1")});
  CHECK_MESSAGE(ok.code == 0, ok.err);
  CHECK(ok.err.empty());
  CHECK(json::parse(ok.out)["ok"] == true);

  // Predictions checked against the wrong dataset: every id is unknown.
  const auto bad = run_cli({"validate", "--dataset", "t=" + ds(root, "t"), "--predictions", "t=" + pr(root, "m1", "c2")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("UnknownExampleId") != std::string::npos);
  CHECK(json::parse(bad.out)["issues"].get<int>() == 80);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"evaluate"}).code == cli::kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);

  const auto missing = run_cli({"evaluate", "--dataset", "/nonexistent.jsonl", "--answers", "/nonexistent2.jsonl"});
  CHECK(missing.code == cli::kExitIo);
  const auto line = json::parse(missing.err.substr(0, missing.err.find('\n')));
  CHECK(line["level"] == "error");
  CHECK(line["code"] == "IoError");
  CHECK(line["exit_code"] == cli::kExitIo);

  const auto root = simulate_small("cli_codes");
  CHECK(run_cli({"evaluate", "--dataset", ds(root, "t"), "--predictions", pr(root, "m1", "c1")}).code == cli::kExitFormat);

  spit(root / "garbage.jsonl", "{\"id\": \n");
  CHECK(run_cli({"evaluate", "--dataset", (root / "garbage.jsonl").string(), "--answers", ds(root, "t")}).code ==
        cli::kExitFormat);

  io::WeightsFile w;
  w.weights.entries = {{"m1", 0.0}};
  io::save_weights(root / "zero.jsonl", w);
  const auto zero = run_cli({"ensemble", "--dataset", ds(root, "t"), "--predictions", pr(root, "m1", "t"), "--weights",
                             (root / "zero.jsonl").string(), "--alpha", "1"});
  CHECK(zero.code == cli::kExitData);
  CHECK(zero.err.find("AllWeightsZero") != std::string::npos);
}

TEST_CASE("estimate-weights pools three capped datasets") {
  const auto dir = scratch(kTmp, "cli_pool");
  spit(dir / "sim.json", R"({
  "seed": 1, "noise_seed": 2, "vocab_size": 50, "context_len": [4, 6], "answer_len": [1, 2],
  "domains": [{"name": "x", "count": 5200}, {"name": "y", "count": 6000}, {"name": "z", "count": 5000}],
  "models": ["m"], "skills": {"m": {"x": 0.5, "y": 0.5, "z": 0.5}}
})");
  const auto root = dir / "out";
  REQUIRE(run_cli({"simulate", "--config", (dir / "sim.json").string(), "--out-dir", root.string()}).code == 0);
  std::vector<std::string> args{"estimate-weights", "--cap", "5000", "--seed", "1"};
  for (const auto* d : {"x", "y", "z"}) {
    args.insert(args.end(), {"--dataset", std::string(d) + "=" + ds(root, d), "--predictions",
                             std::string(d) + "=" + pr(root, "m", d)});
  }
  const auto r = run_cli(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  CHECK(r.err.find(R"("event":"pool","size":15000)") != std::string::npos);
  std::istringstream printed(r.out);
  CHECK(io::read_weights(printed).meta.pool_size == 15000);
}
