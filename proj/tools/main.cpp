// crowdshield command-line interface: corpus ingestion, analytics, Q-value
// training, fusion, classification and the experiment protocols.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 runtime failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crowdshield/analysis.hpp"
#include "crowdshield/classifier.hpp"
#include "crowdshield/config.hpp"
#include "crowdshield/error.hpp"
#include "crowdshield/io.hpp"
#include "crowdshield/metrics.hpp"
#include "crowdshield/pipeline.hpp"
#include "crowdshield/qlearning.hpp"
#include "crowdshield/synth.hpp"

namespace fs = std::filesystem;
using namespace crowdshield;

namespace {

struct CommonArgs {
  std::string config_path;
  std::string input;
  std::string out_dir = "out";
  std::string format;
  std::string claim_sidecar;
  std::string encoder_kind;
  std::string endpoint;
  std::optional<uint64_t> seed;
  bool retrain_per_milestone = false;
  bool literal_eq12 = false;
  bool chronological = false;
  int parallel_conditions = 1;
  std::string alphas_csv;
  std::string pairs_path;
};

void add_common_flags(CLI::App* cmd, CommonArgs& args, bool needs_input) {
  cmd->add_option("--config", args.config_path, "JSON run configuration (crowdshield-config/1)");
  cmd->add_option("--seed", args.seed, "global seed; every component sub-seed derives from it");
  cmd->add_option("--out", args.out_dir, "output directory (default: out)");
  if (needs_input) {
    cmd->add_option("--in", args.input, "input corpus (native JSONL file or RumourEval root)");
    cmd->add_option("--format", args.format, "corpus format: native-jsonl | rumoureval");
    cmd->add_option("--claim-sidecar", args.claim_sidecar,
                    "claim annotations {reply_id: bool} for rumoureval input");
  }
  cmd->add_option("--encoder", args.encoder_kind, "text encoder: hashing | external");
  cmd->add_option("--endpoint", args.endpoint, "embedding service URL for --encoder external");
  cmd->add_flag("--literal-eq12", args.literal_eq12,
                "use the literal alpha*c claim weighting that zeroes non-claims");
}

RunConfig resolve_config(const CommonArgs& args) {
  RunConfig cfg;
  if (!args.config_path.empty()) cfg = load_run_config(args.config_path);

  if (args.seed) {
    cfg.seed = *args.seed;
    cfg.synth.seed = derive_seed(cfg.seed, "synth");
  }
  cfg.pipeline.seed = cfg.seed;
  if (!args.input.empty()) cfg.data_path = args.input;
  if (!args.format.empty()) cfg.data_format = args.format;
  if (!args.claim_sidecar.empty()) cfg.claim_sidecar = args.claim_sidecar;
  if (!args.encoder_kind.empty()) {
    if (args.encoder_kind == "hashing") {
      cfg.pipeline.encoder.kind = EncoderKind::Hashing;
    } else if (args.encoder_kind == "external") {
      cfg.pipeline.encoder.kind = EncoderKind::External;
    } else {
      throw UsageError("unknown encoder kind: " + args.encoder_kind);
    }
  }
  if (!args.endpoint.empty()) cfg.pipeline.encoder.endpoint = args.endpoint;
  if (args.literal_eq12) cfg.pipeline.fusion.literal_weighting = true;
  if (args.retrain_per_milestone) cfg.retrain_per_milestone = true;
  if (!args.alphas_csv.empty()) {
    cfg.alphas.clear();
    std::stringstream ss(args.alphas_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        cfg.alphas.push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw UsageError("bad --alphas value: " + tok);
      }
    }
    if (cfg.alphas.empty()) throw UsageError("--alphas given but empty");
  }
  return cfg;
}

Dataset load_corpus(const RunConfig& cfg) {
  if (cfg.data_path.empty()) {
    throw DataError("no input corpus; pass --in or set data.path in the config");
  }
  const auto fmt = corpus_format_from_string(cfg.data_format);
  if (!fmt) throw UsageError("unknown corpus format: " + cfg.data_format);
  LoadOptions opts;
  opts.format = *fmt;
  if (!cfg.claim_sidecar.empty()) opts.claim_sidecar = cfg.claim_sidecar;
  return load_threads(cfg.data_path, opts);
}

fs::path ensure_out_dir(const CommonArgs& args) {
  fs::path out(args.out_dir);
  fs::create_directories(out);
  return out;
}

void print_stats(const DatasetStats& s) {
  std::printf("%-8s %16s %20s %10s %8s %8s %8s %9s\n", "split", "misinformation",
              "non-misinformation", "support", "deny", "query", "comment", "replies");
  auto row = [](const char* name, const SplitStats& ss) {
    std::printf("%-8s %16lld %20lld %10lld %8lld %8lld %8lld %9lld\n", name,
                static_cast<long long>(ss.mis), static_cast<long long>(ss.non_mis),
                static_cast<long long>(ss.stance_counts[0]),
                static_cast<long long>(ss.stance_counts[1]),
                static_cast<long long>(ss.stance_counts[2]),
                static_cast<long long>(ss.stance_counts[3]),
                static_cast<long long>(ss.replies));
  };
  row("train", s.train);
  row("test", s.test);
  std::printf("total threads: %lld, total replies: %lld\n", static_cast<long long>(s.threads),
              static_cast<long long>(s.replies));
}

// dev split off the train threads; the remainder feeds both trainers
std::pair<std::vector<Thread>, std::vector<Thread>> pipeline_splits(const Dataset& d,
                                                                    const RunConfig& cfg) {
  const auto train_all = d.threads_in(Split::Train);
  if (train_all.empty()) throw DataError("corpus has no train threads");
  return split_train_dev(train_all, cfg.pipeline.dev_fraction,
                         derive_seed(cfg.seed, "dev-split"));
}

struct FeatureBundle {
  QNetwork qnet;
  std::shared_ptr<const TextEncoder> encoder;
  FusionConfig fusion;
};

FusedVector features_for(const Thread& t, const FeatureBundle& fb) {
  const std::vector<double> q_list = thread_q_list(fb.qnet, t, *fb.encoder);
  return fuse(q_feature_vector(q_list, fb.fusion.L), claim_vector(t, fb.fusion.L),
              fb.fusion.alpha, encode_combined(t, *fb.encoder), fb.fusion.literal_weighting);
}

FeatureBundle bundle_from_checkpoint(const RunConfig& cfg, const std::string& qnet_path) {
  FeatureBundle fb;
  fb.qnet = load_qnet(qnet_path);
  PipelineConfig pcfg = with_derived_seeds(cfg.pipeline);
  if (pcfg.encoder.dim + 2 != fb.qnet.d_s) {
    throw DataError("checkpoint " + qnet_path + " expects feature dim " +
                    std::to_string(fb.qnet.d_s) + " but encoder dim is " +
                    std::to_string(pcfg.encoder.dim));
  }
  fb.encoder = std::shared_ptr<const TextEncoder>(make_encoder(pcfg.encoder));
  fb.fusion = pcfg.fusion;
  return fb;
}

int cmd_ingest(const CommonArgs& args) {
  const RunConfig cfg = resolve_config(args);
  const Dataset d = load_corpus(cfg);
  const fs::path out = ensure_out_dir(args);
  save_native_jsonl(d, out / "corpus.jsonl");
  int64_t replies = 0;
  for (const auto& t : d.threads) replies += static_cast<int64_t>(t.n_replies());
  std::printf("ingested %zu threads (%lld replies) -> %s\n", d.threads.size(),
              static_cast<long long>(replies), (out / "corpus.jsonl").string().c_str());
  return 0;
}

int cmd_validate(const CommonArgs& args) {
  const RunConfig cfg = resolve_config(args);
  if (cfg.data_path.empty()) throw DataError("no input corpus; pass --in");
  const auto fmt = corpus_format_from_string(cfg.data_format);
  if (!fmt) throw UsageError("unknown corpus format: " + cfg.data_format);
  LoadOptions opts;
  opts.format = *fmt;
  opts.strict = false;
  if (!cfg.claim_sidecar.empty()) opts.claim_sidecar = cfg.claim_sidecar;
  const Dataset d = load_threads(cfg.data_path, opts);

  int64_t bad = 0;
  for (const auto& t : d.threads) {
    const ValidationReport report = validate_thread(t);
    for (const auto& v : report.violations) {
      std::printf("%s: reply %s violates %s\n", t.thread_id.c_str(), v.reply_id.c_str(),
                  v.rule.c_str());
    }
    if (!report.valid()) ++bad;
  }
  if (bad) {
    std::printf("%lld of %zu threads invalid\n", static_cast<long long>(bad), d.threads.size());
    return 2;
  }
  std::printf("all %zu threads valid\n", d.threads.size());
  return 0;
}

int cmd_stats(const CommonArgs& args, bool write_files) {
  const RunConfig cfg = resolve_config(args);
  const Dataset d = load_corpus(cfg);
  const DatasetStats s = dataset_stats(d);
  print_stats(s);
  if (write_files) {
    const fs::path out = ensure_out_dir(args);
    save_stats_csv(s, out / "stats.csv");
    save_transitions_csv(
        stance_transitions(d, VeracityFilter::Misinformation, args.chronological),
        stance_transitions(d, VeracityFilter::NonMisinformation, args.chronological),
        out / "transitions.csv");
    save_stance_claim_csv(stance_claim_matrix(d), out / "stance_claim.csv");
    std::printf("wrote stats.csv, transitions.csv, stance_claim.csv -> %s\n",
                out.string().c_str());
  }
  return 0;
}

int cmd_synth(const CommonArgs& args) {
  const RunConfig cfg = resolve_config(args);
  const Dataset d = generate_dataset(cfg.synth);
  const fs::path out = ensure_out_dir(args);
  save_native_jsonl(d, out / "corpus.jsonl");
  const DatasetStats s = dataset_stats(d);
  std::printf("generated %zu threads (%lld replies, %lld misinformation) -> %s\n",
              d.threads.size(), static_cast<long long>(s.replies),
              static_cast<long long>(s.train.mis + s.test.mis),
              (out / "corpus.jsonl").string().c_str());
  return 0;
}

int cmd_train_q(const CommonArgs& args) {
  const RunConfig cfg = resolve_config(args);
  const Dataset d = load_corpus(cfg);
  const auto [train, dev] = pipeline_splits(d, cfg);

  const PipelineConfig pcfg = with_derived_seeds(cfg.pipeline);
  const auto encoder = make_encoder(pcfg.encoder);
  const auto [qnet, log] = train_q(train, *encoder, pcfg.qtrain);

  const fs::path out = ensure_out_dir(args);
  save_qnet(qnet, pcfg.qtrain, out / "qnet.json");
  save_trainlog_csv(log, out / "trainlog.csv");
  double last_loss = 0.0;
  for (const auto& row : log.rows) {
    if (row.updated) last_loss = row.loss;
  }
  std::printf("trained Q-network on %zu threads over %d episodes (final loss %.6f) -> %s\n",
              train.size(), pcfg.qtrain.episodes, last_loss,
              (out / "qnet.json").string().c_str());
  return 0;
}

int cmd_export_q(const CommonArgs& args, const std::string& qnet_path) {
  const RunConfig cfg = resolve_config(args);
  const Dataset d = load_corpus(cfg);
  const FeatureBundle fb = bundle_from_checkpoint(cfg, qnet_path);

  const auto table = export_q_table(fb.qnet, d.threads, *fb.encoder);
  const fs::path out = ensure_out_dir(args);
  std::ofstream file(out / "qtable.jsonl", std::ios::binary);
  if (!file) throw DataError("cannot write qtable.jsonl");
  for (const auto& [thread_id, values] : table) {
    nlohmann::ordered_json j;
    j["thread_id"] = thread_id;
    j["q"] = values;
    file << j.dump() << "\n";
  }
  std::printf("exported Q features for %zu threads -> %s\n", table.size(),
              (out / "qtable.jsonl").string().c_str());
  return 0;
}

int cmd_fuse(const CommonArgs& args, const std::string& qnet_path) {
  const RunConfig cfg = resolve_config(args);
  const Dataset d = load_corpus(cfg);
  const FeatureBundle fb = bundle_from_checkpoint(cfg, qnet_path);

  const fs::path out = ensure_out_dir(args);
  std::ofstream file(out / "features.jsonl", std::ios::binary);
  if (!file) throw DataError("cannot write features.jsonl");
  for (const auto& t : d.threads) {
    nlohmann::ordered_json j;
    j["thread_id"] = t.thread_id;
    j["v"] = features_for(t, fb);
    j["label"] = t.veracity == VeracityLabel::Misinformation ? 1 : 0;
    file << j.dump() << "\n";
  }
  std::printf("fused %zu feature vectors (dim %d) -> %s\n", d.threads.size(),
              fb.fusion.L + fb.encoder->dim(), (out / "features.jsonl").string().c_str());
  return 0;
}

int cmd_train(const CommonArgs& args, const std::string& qnet_path) {
  const RunConfig cfg = resolve_config(args);
  const Dataset d = load_corpus(cfg);
  const auto [train, dev] = pipeline_splits(d, cfg);
  const FeatureBundle fb = bundle_from_checkpoint(cfg, qnet_path);

  auto featurize = [&](const std::vector<Thread>& threads) {
    std::vector<std::vector<double>> X;
    std::vector<VeracityLabel> y;
    for (const auto& t : threads) {
      X.push_back(features_for(t, fb));
      y.push_back(t.veracity);
    }
    return std::make_pair(std::move(X), std::move(y));
  };
  const auto [X, y] = featurize(train);
  const auto [X_dev, y_dev] = featurize(dev);

  ClfTrainConfig ccfg = cfg.pipeline.clf;
  ccfg.seed = derive_seed(cfg.seed, "classifier");
  const auto [model, history] = train_classifier(X, y, X_dev, y_dev, ccfg);

  const fs::path out = ensure_out_dir(args);
  save_clf(model, out / "clf.json");
  save_history_csv(history, out / "history.csv");
  double best = 0.0;
  for (const auto& row : history.rows) best = std::max(best, row.dev_macro_f1);
  std::printf("trained classifier on %zu threads (best dev macro-F1 %.4f) -> %s\n", train.size(),
              best, (out / "clf.json").string().c_str());
  return 0;
}

int cmd_evaluate(const CommonArgs& args, const std::string& qnet_path,
                 const std::string& clf_path) {
  const RunConfig cfg = resolve_config(args);
  const Dataset d = load_corpus(cfg);
  const FeatureBundle fb = bundle_from_checkpoint(cfg, qnet_path);
  const LinearClassifier model = load_clf(clf_path);

  const auto test = d.threads_in(Split::Test);
  if (test.empty()) throw DataError("corpus has no test threads");
  std::vector<VeracityLabel> golds, preds;
  for (const auto& t : test) {
    golds.push_back(t.veracity);
    preds.push_back(model.predict(features_for(t, fb)).first);
  }
  const EvalReport report = make_report("full", golds, preds);

  const fs::path out = ensure_out_dir(args);
  save_reports_json({&report, 1}, out / "report.json");
  save_reports_csv({&report, 1}, out / "report.csv");
  std::printf("evaluated %zu test threads: macro-F1 %.4f -> %s\n", test.size(), report.macro_f1,
              (out / "report.json").string().c_str());
  return 0;
}

int cmd_early_detect(const CommonArgs& args) {
  const RunConfig cfg = resolve_config(args);
  const Dataset d = load_corpus(cfg);

  std::vector<EvalReport> reports;
  if (cfg.retrain_per_milestone) {
    reports = early_detection_sweep_retrained(d, cfg.pipeline, cfg.milestones,
                                              args.parallel_conditions);
  } else {
    const TrainedPipeline p = train_pipeline(d, cfg.pipeline);
    reports = early_detection_sweep(p, d.threads_in(Split::Test), cfg.milestones);
  }

  const fs::path out = ensure_out_dir(args);
  save_reports_json(reports, out / "report.json");
  save_reports_csv(reports, out / "report.csv");
  for (const auto& r : reports) {
    std::printf("%-10s macro-F1 %.4f\n", r.condition.c_str(), r.macro_f1);
  }
  return 0;
}

int cmd_ablate(const CommonArgs& args) {
  const RunConfig cfg = resolve_config(args);
  const Dataset d = load_corpus(cfg);

  const std::vector<EvalReport> reports =
      ablation_suite(d, cfg.pipeline, args.parallel_conditions);
  const fs::path out = ensure_out_dir(args);
  save_reports_json(reports, out / "report.json");
  save_reports_csv(reports, out / "report.csv");
  for (const auto& r : reports) {
    std::printf("%-8s macro-F1 %.4f\n", r.condition.c_str(), r.macro_f1);
  }
  return 0;
}

int cmd_alpha_sweep(const CommonArgs& args) {
  const RunConfig cfg = resolve_config(args);
  const Dataset d = load_corpus(cfg);
  const auto reports = alpha_sweep(d, cfg.alphas, cfg.pipeline, args.parallel_conditions);

  const fs::path out = ensure_out_dir(args);
  save_reports_json(reports, out / "report.json");
  save_reports_csv(reports, out / "report.csv");
  for (const auto& r : reports) {
    std::printf("%-10s macro-F1 %.4f\n", r.condition.c_str(), r.macro_f1);
  }
  return 0;
}

int cmd_kappa(const CommonArgs& args, bool write_out) {
  std::ifstream in(args.pairs_path);
  if (!in) throw DataError("cannot open pairs file: " + args.pairs_path);

  std::vector<std::string> a, b;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw DataError(args.pairs_path + ":" + std::to_string(line_no) +
                      ": expected two comma-separated labels");
    }
    a.push_back(line.substr(0, comma));
    b.push_back(line.substr(comma + 1));
  }
  if (a.empty()) throw DataError("pairs file has no label pairs");

  const double kappa = cohens_kappa(a, b);
  std::printf("kappa %.6f over %zu pairs\n", kappa, a.size());
  if (write_out) {
    const fs::path out = ensure_out_dir(args);
    nlohmann::ordered_json j;
    j["pairs"] = a.size();
    j["kappa"] = kappa;
    std::ofstream file(out / "kappa.json", std::ios::binary);
    file << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_pipeline(const CommonArgs& args) {
  const RunConfig cfg = resolve_config(args);
  const Dataset d = load_corpus(cfg);
  const TrainedPipeline p = train_pipeline(d, cfg.pipeline);

  const auto test = d.threads_in(Split::Test);
  if (test.empty()) throw DataError("corpus has no test threads");
  const EvalReport report = evaluate_pipeline(p, test, "full");

  const fs::path out = ensure_out_dir(args);
  save_qnet(p.qnet, with_derived_seeds(cfg.pipeline).qtrain, out / "qnet.json");
  save_clf(p.clf, out / "clf.json");
  save_trainlog_csv(p.qlog, out / "trainlog.csv");
  save_history_csv(p.clf_history, out / "history.csv");
  save_reports_json({&report, 1}, out / "report.json");
  save_reports_csv({&report, 1}, out / "report.csv");
  std::printf("pipeline done: %zu train / %zu test threads, test macro-F1 %.4f -> %s\n",
              d.threads_in(Split::Train).size(), test.size(), report.macro_f1,
              out.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crowdshield: early misinformation prediction over conversation threads"};
  app.require_subcommand(1);

  CommonArgs args;

  CLI::App* ingest = app.add_subcommand("ingest", "convert a corpus to native JSONL");
  add_common_flags(ingest, args, true);

  CLI::App* validate = app.add_subcommand("validate", "report thread invariant violations");
  add_common_flags(validate, args, true);

  CLI::App* stats = app.add_subcommand("stats", "split/veracity/stance statistics");
  add_common_flags(stats, args, true);
  stats->add_flag("--chronological", args.chronological,
                  "stance transitions over chronological succession instead of tree edges");

  CLI::App* synth = app.add_subcommand("synth", "generate a seeded synthetic corpus");
  add_common_flags(synth, args, false);

  CLI::App* train_q_cmd = app.add_subcommand("train-q", "train the Q-network");
  add_common_flags(train_q_cmd, args, true);

  std::string qnet_path = "out/qnet.json";
  std::string clf_path = "out/clf.json";

  CLI::App* export_q_cmd = app.add_subcommand("export-q", "export per-thread Q-feature lists");
  add_common_flags(export_q_cmd, args, true);
  export_q_cmd->add_option("--qnet", qnet_path, "Q-network checkpoint");

  CLI::App* fuse_cmd = app.add_subcommand("fuse", "write fused feature vectors");
  add_common_flags(fuse_cmd, args, true);
  fuse_cmd->add_option("--qnet", qnet_path, "Q-network checkpoint");

  CLI::App* train_cmd = app.add_subcommand("train", "train the misinformation classifier");
  add_common_flags(train_cmd, args, true);
  train_cmd->add_option("--qnet", qnet_path, "Q-network checkpoint");

  CLI::App* evaluate_cmd = app.add_subcommand("evaluate", "evaluate on the test split");
  add_common_flags(evaluate_cmd, args, true);
  evaluate_cmd->add_option("--qnet", qnet_path, "Q-network checkpoint");
  evaluate_cmd->add_option("--clf", clf_path, "classifier checkpoint");

  CLI::App* early = app.add_subcommand("early-detect", "milestone sweep over reply prefixes");
  add_common_flags(early, args, true);
  early->add_flag("--retrain-per-milestone", args.retrain_per_milestone,
                  "retrain on truncated train threads per milestone");
  early->add_option("--parallel-conditions", args.parallel_conditions,
                    "concurrent retrained milestones (default 1)");

  CLI::App* ablate = app.add_subcommand("ablate", "full vs no_q vs no_text conditions");
  add_common_flags(ablate, args, true);
  ablate->add_option("--parallel-conditions", args.parallel_conditions,
                     "concurrent ablation conditions (default 1)");

  CLI::App* alpha = app.add_subcommand("alpha-sweep", "train/evaluate per claim weight");
  add_common_flags(alpha, args, true);
  alpha->add_option("--alphas", args.alphas_csv, "comma-separated claim weights (default 1,2,3)");
  alpha->add_option("--parallel-conditions", args.parallel_conditions,
                    "concurrent sweep conditions (default 1)");

  CLI::App* kappa = app.add_subcommand("kappa", "Cohen's kappa over a two-column label CSV");
  kappa->add_option("--pairs", args.pairs_path, "CSV with lines label_a,label_b")->required();
  CLI::Option* kappa_out = kappa->add_option("--out", args.out_dir, "write kappa.json here");

  CLI::App* pipeline = app.add_subcommand("pipeline", "end-to-end train + evaluate");
  add_common_flags(pipeline, args, true);

  CLI::Option* stats_out = stats->get_option("--out");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return 1;
  }

  try {
    if (ingest->parsed()) return cmd_ingest(args);
    if (validate->parsed()) return cmd_validate(args);
    if (stats->parsed()) return cmd_stats(args, stats_out->count() > 0);
    if (synth->parsed()) return cmd_synth(args);
    if (train_q_cmd->parsed()) return cmd_train_q(args);
    if (export_q_cmd->parsed()) return cmd_export_q(args, qnet_path);
    if (fuse_cmd->parsed()) return cmd_fuse(args, qnet_path);
    if (train_cmd->parsed()) return cmd_train(args, qnet_path);
    if (evaluate_cmd->parsed()) return cmd_evaluate(args, qnet_path, clf_path);
    if (early->parsed()) return cmd_early_detect(args);
    if (ablate->parsed()) return cmd_ablate(args);
    if (alpha->parsed()) return cmd_alpha_sweep(args);
    if (kappa->parsed()) return cmd_kappa(args, kappa_out->count() > 0);
    if (pipeline->parsed()) return cmd_pipeline(args);
    std::cerr << "no subcommand given; run with --help\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
