#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qaens/decoder.hpp"
#include "qaens/errors.hpp"
#include "qaens/io.hpp"
#include "qaens/pipeline.hpp"
#include "qaens/simulator.hpp"
#include "qaens/weighting.hpp"

namespace qaens::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return kExitUsage;
    case ErrorCode::IoError:
      return kExitIo;
    case ErrorCode::ParseError:
    case ErrorCode::SchemaViolation:
    case ErrorCode::DuplicateExampleId:
    case ErrorCode::UnknownExampleId:
      return kExitFormat;
    default:
      return kExitData;
  }
}

class Log {
 public:
  explicit Log(std::ostream& err) : err_(err) {}

  void info(const std::string& event, ordered_json fields = ordered_json::object()) {
    ordered_json r;
    r["level"] = "info";
    r["event"] = event;
    r.update(fields);
    err_ << r.dump() << '\n';
  }

  void error(const std::string& code, const std::string& message, std::optional<int> exit_code = {},
             ordered_json fields = ordered_json::object()) {
    ordered_json r;
    r["level"] = "error";
    r["code"] = code;
    r["message"] = message;
    r.update(fields);
    if (exit_code) r["exit_code"] = *exit_code;
    err_ << r.dump() << '\n';
  }

 private:
  std::ostream& err_;
};

// "name=path" or a bare path whose stem becomes the name.
std::pair<std::string, fs::path> named_path(const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos) return {fs::path(arg).stem().string(), fs::path(arg)};
  if (eq == 0) fail(ErrorCode::InvalidArgument, "empty name in '" + arg + "'");
  return {arg.substr(0, eq), fs::path(arg.substr(eq + 1))};
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "bad alpha grid value '" + item + "'");
    }
  }
  return out;
}

template <typename Fn>
void write_to(const fs::path& path, Fn&& fn) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  fn(out);
  if (!out) fail(ErrorCode::IoError, "failed writing '" + path.string() + "'");
}

// Datasets named on the command line plus the per-model prediction files that
// refer to them.
struct CalibrationInputs {
  std::vector<Dataset> datasets;
  std::vector<CalibrationPredictions> models;  // requested model order
};

CalibrationInputs load_calibration(const std::vector<std::string>& dataset_args,
                                   const std::vector<std::string>& prediction_args,
                                   const std::vector<std::string>& model_order) {
  CalibrationInputs in;
  std::map<std::string, std::size_t> by_name;
  for (const auto& arg : dataset_args) {
    auto [name, path] = named_path(arg);
    if (by_name.count(name)) fail(ErrorCode::InvalidArgument, "dataset '" + name + "' given twice");
    by_name[name] = in.datasets.size();
    in.datasets.push_back(io::load_dataset(path, name));
  }
  std::vector<std::string> order = model_order;
  std::map<std::string, CalibrationPredictions> models;
  for (const auto& arg : prediction_args) {
    const auto eq = arg.find('=');
    std::string ds_name;
    fs::path path;
    if (eq == std::string::npos) {
      if (in.datasets.size() != 1) {
        fail(ErrorCode::InvalidArgument, "prediction file '" + arg + "' must be given as DATASET=PATH");
      }
      ds_name = in.datasets.front().name();
      path = arg;
    } else {
      ds_name = arg.substr(0, eq);
      path = arg.substr(eq + 1);
    }
    const auto it = by_name.find(ds_name);
    if (it == by_name.end()) fail(ErrorCode::InvalidArgument, "prediction file refers to unknown dataset '" + ds_name + "'");
    auto set = io::load_predictions(path, in.datasets[it->second]);
    const auto model = set.model_id();
    if (model_order.empty() && std::find(order.begin(), order.end(), model) == order.end()) order.push_back(model);
    auto& entry = models[model];
    entry.model_id = model;
    if (!entry.by_dataset.emplace(ds_name, std::move(set)).second) {
      fail(ErrorCode::InvalidArgument, "two prediction files for model '" + model + "' on '" + ds_name + "'");
    }
  }
  if (order.empty()) fail(ErrorCode::InvalidArgument, "no prediction files given");
  for (const auto& m : order) {
    const auto it = models.find(m);
    if (it == models.end()) fail(ErrorCode::InvalidArgument, "no predictions for model '" + m + "'");
    in.models.push_back(std::move(it->second));
  }
  return in;
}

struct Options {
  // shared
  std::vector<std::string> datasets;
  std::vector<std::string> predictions;
  std::string models;
  std::string out;
  std::uint64_t seed = 0;
  std::size_t cap = 5000;
  bool no_cap = false;
  std::string metric = "f1";
  std::size_t max_span_len = 30;
  // evaluate
  std::string answers;
  std::string answers_out;
  // tune-alpha
  std::string grid = "1,2,3,4";
  std::size_t folds = 5;
  // ensemble
  std::string weights;
  std::optional<double> alpha;
  std::string alpha_file;
  bool simple = false;
  bool no_normalize = false;
  // simulate
  std::string config;
  std::string scenario;
  std::string out_dir;
  std::string scale = "full";
  // report
  std::string manifest;
  bool timing = false;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_validate(const Options& o, std::ostream& out, Log& log) {
  std::size_t total_issues = 0;
  ordered_json files = ordered_json::array();
  std::map<std::string, Dataset> datasets;
  const auto record = [&](const std::string& path, const char* kind, std::size_t records,
                          const std::vector<io::Issue>& issues) {
    for (const auto& issue : issues) {
      log.error(std::string(to_string(issue.code)), issue.message, std::nullopt,
                {{"file", path}, {"line", issue.line}});
    }
    total_issues += issues.size();
    files.push_back({{"path", path}, {"kind", kind}, {"records", records}, {"issues", issues.size()}});
  };
  for (const auto& arg : o.datasets) {
    auto [name, path] = named_path(arg);
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot open '" + path.string() + "' for reading");
    std::vector<io::Issue> issues;
    auto ds = io::read_dataset(in, name, &issues);
    record(path.string(), "dataset", ds.size(), issues);
    datasets.emplace(name, std::move(ds));
  }
  for (const auto& arg : o.predictions) {
    std::string ds_name;
    fs::path path;
    if (const auto eq = arg.find('='); eq != std::string::npos) {
      ds_name = arg.substr(0, eq);
      path = arg.substr(eq + 1);
    } else if (datasets.size() == 1) {
      ds_name = datasets.begin()->first;
      path = arg;
    } else {
      fail(ErrorCode::InvalidArgument, "prediction file '" + arg + "' must be given as DATASET=PATH");
    }
    const auto it = datasets.find(ds_name);
    if (it == datasets.end()) fail(ErrorCode::InvalidArgument, "unknown dataset '" + ds_name + "'");
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot open '" + path.string() + "' for reading");
    std::vector<io::Issue> issues;
    const auto set = io::read_predictions(in, it->second, &issues);
    record(path.string(), "predictions", set.size(), issues);
  }
  if (!o.weights.empty()) {
    std::vector<io::Issue> issues;
    try {
      io::load_weights(o.weights);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::IoError) throw;
      issues.push_back({0, e.code(), e.what()});
    }
    record(o.weights, "weights", issues.empty() ? 1 : 0, issues);
  }
  if (files.empty()) fail(ErrorCode::InvalidArgument, "nothing to validate");
  ordered_json summary;
  summary["ok"] = total_issues == 0;
  summary["issues"] = total_issues;
  summary["files"] = files;
  out << summary.dump(2) << '\n';
  return total_issues == 0 ? kExitOk : kExitInvalidFiles;
}

int cmd_evaluate(const Options& o, std::ostream& out, Log&) {
  if (o.datasets.size() != 1) fail(ErrorCode::InvalidArgument, "evaluate takes exactly one --dataset");
  if (o.predictions.empty() == o.answers.empty() || o.predictions.size() > 1) {
    fail(ErrorCode::InvalidArgument, "evaluate takes one --predictions file or one --answers file");
  }
  auto [name, path] = named_path(o.datasets.front());
  const auto ds = io::load_dataset(path, name);
  ordered_json r;
  r["dataset"] = ds.name();
  AnswerMap answers;
  if (!o.predictions.empty()) {
    const auto set = io::load_predictions(o.predictions.front(), ds);
    answers = decode_model(ds, set, {o.max_span_len});
    r["model"] = set.model_id();
    if (!o.answers_out.empty()) io::save_answers(o.answers_out, answers);
  } else {
    answers = io::load_answers(o.answers);
  }
  const auto s = evaluate_answers(answers, ds);
  r["examples"] = ds.size();
  r["f1"] = s.f1;
  r["em"] = s.em;
  out << r.dump() << '\n';
  return kExitOk;
}

int cmd_estimate_weights(const Options& o, std::ostream& out, Log& log) {
  const auto in = load_calibration(o.datasets, o.predictions, split_list(o.models));
  const std::optional<std::size_t> cap = o.no_cap ? std::nullopt : std::optional<std::size_t>(o.cap);
  const auto pool = sample_calibration({in.datasets, cap, o.seed});
  log.info("pool", {{"size", pool.size()}, {"datasets", in.datasets.size()}});
  io::WeightsFile file;
  file.meta.metric = parse_metric(o.metric);
  for (const auto& m : in.models) file.meta.models.push_back(m.model_id);
  for (const auto& d : in.datasets) file.meta.calibration_datasets.push_back(d.name());
  file.meta.pool_size = pool.size();
  file.meta.cap = cap;
  file.meta.seed = o.seed;
  file.weights = estimate_weights(in.models, pool, file.meta.metric, {o.max_span_len});
  if (!o.out.empty()) io::save_weights(o.out, file);
  io::write_weights(out, file);
  return kExitOk;
}

int cmd_tune_alpha(const Options& o, std::ostream& out, Log& log) {
  const auto in = load_calibration(o.datasets, o.predictions, split_list(o.models));
  const std::optional<std::size_t> cap = o.no_cap ? std::nullopt : std::optional<std::size_t>(o.cap);
  const auto pool = sample_calibration({in.datasets, cap, o.seed});
  log.info("pool", {{"size", pool.size()}, {"datasets", in.datasets.size()}});
  const AlphaGrid grid{parse_grid(o.grid), o.folds};
  EnsembleConfig base;
  base.decode.max_span_len = o.max_span_len;
  base.normalize_weights = !o.no_normalize;
  base.weight_metric = parse_metric(o.metric);
  io::AlphaFile file;
  file.selection = select_alpha(in.models, pool, grid, base.weight_metric, base, o.seed);
  file.folds = grid.folds;
  file.seed = o.seed;
  file.metric = base.weight_metric;
  file.pool_size = pool.size();
  if (!o.out.empty()) io::save_alpha(o.out, file);
  io::write_alpha(out, file);
  return kExitOk;
}

int cmd_ensemble(const Options& o, std::ostream& out, Log&) {
  if (o.datasets.size() != 1) fail(ErrorCode::InvalidArgument, "ensemble takes exactly one --dataset");
  if (o.predictions.empty()) fail(ErrorCode::InvalidArgument, "ensemble needs --predictions files");
  auto [name, path] = named_path(o.datasets.front());
  const auto ds = io::load_dataset(path, name);
  std::vector<PredictionSet> sets;
  for (const auto& p : o.predictions) sets.push_back(io::load_predictions(p, ds));
  std::vector<const PredictionSet*> ptrs;
  for (const auto& s : sets) ptrs.push_back(&s);

  ordered_json r;
  r["dataset"] = ds.name();
  ordered_json models = ordered_json::array();
  for (const auto& s : sets) models.push_back(s.model_id());
  r["models"] = models;
  AnswerMap answers;
  if (o.simple) {
    r["method"] = "simple";
    answers = decode_simple(ds, ptrs, {o.max_span_len});
  } else {
    if (o.weights.empty()) fail(ErrorCode::InvalidArgument, "weighted ensemble needs --weights (or use --simple)");
    if (o.alpha.has_value() == !o.alpha_file.empty()) {
      fail(ErrorCode::InvalidArgument, "give exactly one of --alpha and --alpha-file");
    }
    const auto weights = io::load_weights(o.weights).weights;
    EnsembleConfig cfg;
    cfg.alpha = o.alpha ? *o.alpha : io::load_alpha(o.alpha_file).selection.alpha;
    cfg.normalize_weights = !o.no_normalize;
    cfg.decode.max_span_len = o.max_span_len;
    r["method"] = "weighted";
    r["alpha"] = cfg.alpha;
    answers = decode_weighted(ds, ptrs, weights, cfg);
  }
  if (!o.out.empty()) io::save_answers(o.out, answers);
  const auto s = evaluate_answers(answers, ds);
  r["examples"] = ds.size();
  r["f1"] = s.f1;
  r["em"] = s.em;
  out << r.dump() << '\n';
  return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out, Log& log) {
  if (o.out_dir.empty()) fail(ErrorCode::InvalidArgument, "simulate needs --out-dir");
  io::SimFile file;
  if (!o.scenario.empty()) {
    if (!o.config.empty()) fail(ErrorCode::InvalidArgument, "give either --config or --scenario");
    if (o.scenario != "robustness") fail(ErrorCode::InvalidArgument, "unknown scenario '" + o.scenario + "'");
    ScenarioShape shape;
    if (o.scale == "small") {
      shape.home_count = 50;
      shape.calibration_count = 200;
      shape.test_count = 200;
    } else if (o.scale != "full") {
      fail(ErrorCode::InvalidArgument, "--scale must be full or small");
    }
    const auto sc = robustness_scenario(o.seed, shape);
    file.config = sc.config;
    file.calibration = sc.calibration_domains;
    file.targets = sc.test_domains;
  } else if (!o.config.empty()) {
    std::ifstream in(o.config, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot open '" + o.config + "' for reading");
    file = io::read_sim_config(in);
  } else {
    fail(ErrorCode::InvalidArgument, "simulate needs --config or --scenario");
  }

  const fs::path dir(o.out_dir);
  const auto corpus = generate_corpus(file.config);
  const auto preds = generate_predictions(corpus, file.config);
  write_to(dir / "sim_config.json", [&](std::ostream& s) { io::write_sim_config(s, file); });
  std::map<std::string, fs::path> dataset_paths;
  for (const auto& [name, ds] : corpus) {
    dataset_paths[name] = fs::path("datasets") / (name + ".jsonl");
    io::save_dataset(dir / dataset_paths[name], ds);
  }
  const auto pred_path = [](const std::string& model, const std::string& domain) {
    return fs::path("predictions") / model / (domain + ".jsonl");
  };
  for (const auto& [model, by_domain] : preds) {
    for (const auto& [domain, set] : by_domain) io::save_predictions(dir / pred_path(model, domain), set);
  }

  ordered_json manifests = ordered_json::array();
  if (!file.calibration.empty()) {
    const auto files_for = [&](const std::string& domain) {
      if (!corpus.count(domain)) fail(ErrorCode::ConfigMismatch, "role refers to unknown domain '" + domain + "'");
      io::DatasetFiles f{domain, dataset_paths.at(domain), {}};
      for (const auto& m : file.config.models) f.predictions[m] = pred_path(m, domain);
      return f;
    };
    for (const auto& target : file.targets) {
      io::RunSpec spec;
      spec.base_models = file.config.models;
      for (const auto& c : file.calibration) spec.calibration.push_back(files_for(c));
      spec.target = files_for(target);
      spec.seed = o.seed;
      const auto manifest = "run_" + target + ".json";
      write_to(dir / manifest, [&](std::ostream& s) { io::write_run_spec(s, spec); });
      manifests.push_back(manifest);
    }
  }
  log.info("simulated", {{"domains", corpus.size()}, {"models", file.config.models.size()}});
  ordered_json r;
  r["out_dir"] = dir.generic_string();
  r["domains"] = ordered_json::array();
  for (const auto& [name, ds] : corpus) r["domains"].push_back({{"name", name}, {"examples", ds.size()}});
  r["models"] = file.config.models;
  r["run_specs"] = manifests;
  out << r.dump(2) << '\n';
  return kExitOk;
}

int cmd_report(const Options& o, std::ostream& out, Log& log) {
  if (o.manifest.empty()) fail(ErrorCode::InvalidArgument, "report needs --manifest");
  const auto spec = io::load_run_spec(o.manifest);
  PipelineInputs in;
  in.manifest.base_model_ids = spec.base_models;
  for (const auto& c : spec.calibration) in.manifest.calibration_dataset_names.push_back(c.name);
  in.manifest.target_dataset_name = spec.target.name;
  in.manifest.seed = spec.seed;
  in.manifest.config.normalize_weights = spec.normalize_weights;
  in.manifest.config.decode.max_span_len = spec.max_span_len;
  in.manifest.config.weight_metric = spec.metric;
  in.cap = spec.cap;
  in.grid = spec.grid;
  in.manifest.validate();

  const auto prediction_path = [](const io::DatasetFiles& f, const std::string& model) {
    const auto it = f.predictions.find(model);
    if (it == f.predictions.end()) {
      fail(ErrorCode::ConfigMismatch, "no prediction file for model '" + model + "' on '" + f.name + "'");
    }
    return it->second;
  };
  for (const auto& m : spec.base_models) in.calibration_predictions.push_back({m, {}});
  for (const auto& c : spec.calibration) {
    in.calibration.push_back(io::load_dataset(c.dataset, c.name));
    for (auto& cp : in.calibration_predictions) {
      cp.by_dataset.emplace(c.name, io::load_predictions(prediction_path(c, cp.model_id), in.calibration.back()));
    }
  }
  in.target = io::load_dataset(spec.target.dataset, spec.target.name);
  for (const auto& m : spec.base_models) {
    in.target_predictions.push_back(io::load_predictions(prediction_path(spec.target, m), in.target));
  }
  const auto report = run_pipeline(in);
  log.info("pool", {{"size", report.pool_size}});
  if (!o.out.empty()) io::save_report(o.out, report, o.timing);
  io::write_report(out, report, o.timing);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Log log(err);
  Options o;
  CLI::App app{"Zero-shot weighted ensembling of extractive QA span predictions", "qaens"};
  app.require_subcommand(1);

  const auto add_calibration = [&](CLI::App* sub) {
    sub->add_option("--dataset", o.datasets, "Calibration dataset file, as NAME=PATH or PATH")->required();
    sub->add_option("--predictions", o.predictions, "Prediction file as DATASET=PATH")->required();
    sub->add_option("--models", o.models, "Comma-separated model order (default: order of appearance)");
    sub->add_option("--cap", o.cap, "Examples sampled per calibration dataset")->check(CLI::PositiveNumber);
    sub->add_flag("--no-cap", o.no_cap, "Use every calibration example");
    sub->add_option("--seed", o.seed, "Seed for sampling and fold assignment");
    sub->add_option("--metric", o.metric, "f1 or em")->check(CLI::IsMember({"f1", "em", "token_f1", "exact_match"}));
    sub->add_option("--max-span-len", o.max_span_len, "Longest decodable span in tokens")->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "Write the result to this file");
  };

  auto* validate = app.add_subcommand("validate", "Check dataset, prediction and weights files");
  validate->add_option("--dataset", o.datasets, "Dataset file, as NAME=PATH or PATH");
  validate->add_option("--predictions", o.predictions, "Prediction file, as DATASET=PATH");
  validate->add_option("--weights", o.weights, "Weights file");

  auto* evaluate = app.add_subcommand("evaluate", "Score one model or an answers file against gold");
  evaluate->add_option("--dataset", o.datasets, "Gold dataset file")->required();
  evaluate->add_option("--predictions", o.predictions, "Prediction file of one model");
  evaluate->add_option("--answers", o.answers, "Decoded answers file");
  evaluate->add_option("--answers-out", o.answers_out, "Write the model's decoded answers here");
  evaluate->add_option("--max-span-len", o.max_span_len)->check(CLI::PositiveNumber);

  auto* estimate = app.add_subcommand("estimate-weights", "Estimate model weights on calibration data");
  add_calibration(estimate);

  auto* tune = app.add_subcommand("tune-alpha", "Select alpha by out-of-fold grid search");
  add_calibration(tune);
  tune->add_option("--grid", o.grid, "Comma-separated ascending alpha values");
  tune->add_option("--folds", o.folds, "Number of folds")->check(CLI::Range(2, 1000000));
  tune->add_flag("--no-normalize", o.no_normalize, "Use the unnormalized weighted sum");

  auto* ensemble = app.add_subcommand("ensemble", "Ensemble target predictions and score them");
  ensemble->add_option("--dataset", o.datasets, "Target dataset file")->required();
  ensemble->add_option("--predictions", o.predictions, "Prediction files, one per model, in model order")->required();
  ensemble->add_option("--weights", o.weights, "Weights file from estimate-weights");
  ensemble->add_option("--alpha", o.alpha, "Weight exponent")->check(CLI::PositiveNumber);
  ensemble->add_option("--alpha-file", o.alpha_file, "Output of tune-alpha");
  ensemble->add_flag("--simple", o.simple, "Arithmetic-mean baseline instead of weights");
  ensemble->add_flag("--no-normalize", o.no_normalize, "Use the unnormalized weighted sum");
  ensemble->add_option("--max-span-len", o.max_span_len)->check(CLI::PositiveNumber);
  ensemble->add_option("--out", o.out, "Write decoded answers to this file");

  auto* simulate = app.add_subcommand("simulate", "Emit a synthetic corpus and model predictions");
  simulate->add_option("--config", o.config, "Simulator configuration file");
  simulate->add_option("--scenario", o.scenario, "Built-in scenario (robustness)");
  simulate->add_option("--scale", o.scale, "Scenario size: full or small");
  simulate->add_option("--seed", o.seed, "Scenario seed");
  simulate->add_option("--out-dir", o.out_dir, "Output directory")->required();

  auto* report = app.add_subcommand("report", "Run the full pipeline from a run spec and write a report");
  report->add_option("--manifest", o.manifest, "Run spec file")->required();
  report->add_option("--out", o.out, "Write the report to this file");
  report->add_flag("--timing", o.timing, "Include per-stage wall-clock timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    log.error("UsageError", e.what(), kExitUsage);
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(o, out, log);
    if (*evaluate) return cmd_evaluate(o, out, log);
    if (*estimate) return cmd_estimate_weights(o, out, log);
    if (*tune) return cmd_tune_alpha(o, out, log);
    if (*ensemble) return cmd_ensemble(o, out, log);
    if (*simulate) return cmd_simulate(o, out, log);
    if (*report) return cmd_report(o, out, log);
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    log.error(std::string(to_string(e.code())), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    log.error("InternalError", e.what(), kExitData);
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace qaens::cli
