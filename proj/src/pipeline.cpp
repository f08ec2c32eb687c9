#include "crowdshield/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <thread>

#include "crowdshield/rng.hpp"

namespace crowdshield {

std::optional<AblationMode> ablation_from_string(std::string_view s) {
  if (s == "full") return AblationMode::Full;
  if (s == "no_q") return AblationMode::NoQ;
  if (s == "no_text") return AblationMode::NoText;
  return std::nullopt;
}

std::string_view to_string(AblationMode m) {
  switch (m) {
    case AblationMode::Full: return "full";
    case AblationMode::NoQ: return "no_q";
    case AblationMode::NoText: return "no_text";
  }
  return "full";
}

PipelineConfig with_derived_seeds(PipelineConfig cfg) {
  cfg.encoder.seed = derive_seed(cfg.seed, "encoder");
  cfg.qtrain.seed = derive_seed(cfg.seed, "qtrain");
  cfg.clf.seed = derive_seed(cfg.seed, "classifier");
  return cfg;
}

FusedVector pipeline_features(const Thread& t, const TrainedPipeline& p) {
  const std::vector<double> q_list = thread_q_list(p.qnet, t, *p.encoder);
  const std::vector<double> F = q_feature_vector(q_list, p.fusion.L);
  const std::vector<int> c = claim_vector(t, p.fusion.L);
  Embedding S = encode_combined(t, *p.encoder);
  if (p.ablation == AblationMode::NoText) {
    std::fill(S.values.begin(), S.values.end(), 0.0);
  }
  FusedVector v = fuse(F, c, p.fusion.alpha, S, p.fusion.literal_weighting);
  if (p.ablation == AblationMode::NoQ) {
    std::fill(v.begin(), v.begin() + p.fusion.L, 0.0);
  }
  return v;
}

TrainedPipeline train_pipeline(const Dataset& d, const PipelineConfig& raw_cfg) {
  const PipelineConfig cfg = with_derived_seeds(raw_cfg);
  const std::vector<Thread> train_all = d.threads_in(Split::Train);
  if (train_all.empty()) throw std::invalid_argument("train_pipeline: no train threads");

  const auto [train, dev] =
      split_train_dev(train_all, cfg.dev_fraction, derive_seed(cfg.seed, "dev-split"));
  if (dev.empty()) {
    throw std::invalid_argument("train_pipeline: dev split is empty; use dev_fraction > 0");
  }

  TrainedPipeline p;
  p.encoder = std::shared_ptr<const TextEncoder>(make_encoder(cfg.encoder));
  p.fusion = cfg.fusion;
  p.ablation = cfg.ablation;

  auto [qnet, qlog] = train_q(train, *p.encoder, cfg.qtrain);
  p.qnet = std::move(qnet);
  p.qlog = std::move(qlog);

  auto features_of = [&](const std::vector<Thread>& threads) {
    std::vector<std::vector<double>> X;
    std::vector<VeracityLabel> y;
    X.reserve(threads.size());
    y.reserve(threads.size());
    for (const auto& t : threads) {
      X.push_back(pipeline_features(t, p));
      y.push_back(t.veracity);
    }
    return std::make_pair(std::move(X), std::move(y));
  };

  const auto [X, y] = features_of(train);
  const auto [X_dev, y_dev] = features_of(dev);

  auto [clf, history] = train_classifier(X, y, X_dev, y_dev, cfg.clf);
  p.clf = std::move(clf);
  p.clf_history = std::move(history);
  return p;
}

VeracityLabel pipeline_predict(const TrainedPipeline& p, const Thread& t) {
  return p.clf.predict(pipeline_features(t, p)).first;
}

EvalReport evaluate_pipeline(const TrainedPipeline& p, const std::vector<Thread>& test,
                             const std::string& condition) {
  if (test.empty()) throw std::invalid_argument("evaluate_pipeline: empty test set");
  std::vector<VeracityLabel> golds, preds;
  golds.reserve(test.size());
  preds.reserve(test.size());
  for (const auto& t : test) {
    golds.push_back(t.veracity);
    preds.push_back(pipeline_predict(p, t));
  }
  return make_report(condition, golds, preds);
}

std::string Milestone::tag() const {
  if (!tau) return "tau=all";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "tau=%d", *tau);
  return buf;
}

namespace {

std::vector<Thread> truncate_all(const std::vector<Thread>& threads, int tau) {
  std::vector<Thread> out;
  out.reserve(threads.size());
  for (const auto& t : threads) out.push_back(truncate_thread(t, static_cast<size_t>(tau)));
  return out;
}

// Each condition is an independent seeded train/evaluate cycle, so
// execution order cannot change the reports.
std::vector<EvalReport> run_conditions(std::vector<std::function<EvalReport()>> jobs,
                                       int parallel) {
  std::vector<EvalReport> reports(jobs.size());
  if (parallel <= 1 || jobs.size() <= 1) {
    for (size_t i = 0; i < jobs.size(); ++i) reports[i] = jobs[i]();
    return reports;
  }
  std::atomic<size_t> next{0};
  std::vector<std::string> errors(jobs.size());
  auto worker = [&]() {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        reports[i] = jobs[i]();
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  const size_t n_workers = std::min<size_t>(static_cast<size_t>(parallel), jobs.size());
  pool.reserve(n_workers);
  for (size_t i = 0; i < n_workers; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (const auto& err : errors) {
    if (!err.empty()) throw std::runtime_error(err);
  }
  return reports;
}

}  // namespace

std::vector<EvalReport> early_detection_sweep(const TrainedPipeline& p,
                                              const std::vector<Thread>& test,
                                              std::span<const Milestone> milestones) {
  std::vector<EvalReport> reports;
  reports.reserve(milestones.size());
  for (const auto& m : milestones) {
    if (m.tau) {
      reports.push_back(evaluate_pipeline(p, truncate_all(test, *m.tau), m.tag()));
    } else {
      reports.push_back(evaluate_pipeline(p, test, m.tag()));
    }
  }
  return reports;
}

std::vector<EvalReport> early_detection_sweep_retrained(const Dataset& d,
                                                        const PipelineConfig& cfg,
                                                        std::span<const Milestone> milestones,
                                                        int parallel_conditions) {
  std::vector<std::function<EvalReport()>> jobs;
  for (const auto& m : milestones) {
    jobs.emplace_back([&d, cfg, m]() {
      Dataset working = d;
      if (m.tau) {
        for (auto& t : working.threads) t = truncate_thread(t, static_cast<size_t>(*m.tau));
      }
      const TrainedPipeline p = train_pipeline(working, cfg);
      return evaluate_pipeline(p, working.threads_in(Split::Test), m.tag());
    });
  }
  return run_conditions(std::move(jobs), parallel_conditions);
}

EvalReport ablation_run(const Dataset& d, AblationMode mode, PipelineConfig cfg) {
  cfg.ablation = mode;
  const TrainedPipeline p = train_pipeline(d, cfg);
  return evaluate_pipeline(p, d.threads_in(Split::Test), std::string(to_string(mode)));
}

std::vector<EvalReport> ablation_suite(const Dataset& d, const PipelineConfig& cfg,
                                       int parallel_conditions) {
  std::vector<std::function<EvalReport()>> jobs;
  for (const AblationMode mode : {AblationMode::Full, AblationMode::NoQ, AblationMode::NoText}) {
    jobs.emplace_back([&d, cfg, mode]() { return ablation_run(d, mode, cfg); });
  }
  return run_conditions(std::move(jobs), parallel_conditions);
}

std::vector<EvalReport> alpha_sweep(const Dataset& d, std::span<const double> alphas,
                                    PipelineConfig cfg, int parallel_conditions) {
  std::vector<std::function<EvalReport()>> jobs;
  for (const double alpha : alphas) {
    PipelineConfig run_cfg = cfg;  // fixed seed across the sweep
    run_cfg.fusion.alpha = alpha;
    jobs.emplace_back([&d, run_cfg, alpha]() {
      const TrainedPipeline p = train_pipeline(d, run_cfg);
      char buf[48];
      std::snprintf(buf, sizeof(buf), "alpha=%g", alpha);
      return evaluate_pipeline(p, d.threads_in(Split::Test), buf);
    });
  }
  return run_conditions(std::move(jobs), parallel_conditions);
}

}  // namespace crowdshield
