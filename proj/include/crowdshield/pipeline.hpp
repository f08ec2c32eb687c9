#pragma once
// End-to-end orchestration: Q-training on the train split, claim-weighted
// fusion, classifier training with a dev split, and the experiment
// protocols (early-detection milestones, ablations, alpha sweep).

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crowdshield/classifier.hpp"
#include "crowdshield/encoder.hpp"
#include "crowdshield/fusion.hpp"
#include "crowdshield/metrics.hpp"
#include "crowdshield/qlearning.hpp"
#include "crowdshield/thread.hpp"

namespace crowdshield {

// no_q zeroes the weighted Q block; no_text zeroes the embedding block.
// Both keep the fused dimensionality comparable across conditions.
enum class AblationMode { Full, NoQ, NoText };

std::optional<AblationMode> ablation_from_string(std::string_view s);
std::string_view to_string(AblationMode m);

struct PipelineConfig {
  EncoderConfig encoder;
  QTrainConfig qtrain;
  FusionConfig fusion;
  ClfTrainConfig clf;
  double dev_fraction = 0.1;
  uint64_t seed = 42;
  AblationMode ablation = AblationMode::Full;
};

// Sub-seeds derive from the global seed by stable component-name hashing.
PipelineConfig with_derived_seeds(PipelineConfig cfg);

struct TrainedPipeline {
  std::shared_ptr<const TextEncoder> encoder;
  QNetwork qnet;
  LinearClassifier clf;
  FusionConfig fusion;
  AblationMode ablation = AblationMode::Full;
  TrainLog qlog;
  TrainHistory clf_history;
};

// Weighted Q block fused with the combined-text embedding, ablation
// applied; works on truncated threads as-is.
FusedVector pipeline_features(const Thread& t, const TrainedPipeline& p);

TrainedPipeline train_pipeline(const Dataset& d, const PipelineConfig& cfg);

VeracityLabel pipeline_predict(const TrainedPipeline& p, const Thread& t);

EvalReport evaluate_pipeline(const TrainedPipeline& p, const std::vector<Thread>& test,
                             const std::string& condition);

struct Milestone {
  std::optional<int> tau;  // nullopt = full threads
  std::string tag() const;
};

// Truncates at inference only: every feature is recomputed from the
// tau-prefix of each test thread.
std::vector<EvalReport> early_detection_sweep(const TrainedPipeline& p,
                                              const std::vector<Thread>& test,
                                              std::span<const Milestone> milestones);

// Retrains the whole pipeline on tau-truncated train threads per milestone.
// parallel_conditions > 1 runs milestones concurrently; results are
// identical either way.
std::vector<EvalReport> early_detection_sweep_retrained(const Dataset& d,
                                                        const PipelineConfig& cfg,
                                                        std::span<const Milestone> milestones,
                                                        int parallel_conditions = 1);

EvalReport ablation_run(const Dataset& d, AblationMode mode, PipelineConfig cfg);

// full, no_q, no_text under one seed.
std::vector<EvalReport> ablation_suite(const Dataset& d, const PipelineConfig& cfg,
                                       int parallel_conditions = 1);

std::vector<EvalReport> alpha_sweep(const Dataset& d, std::span<const double> alphas,
                                    PipelineConfig cfg, int parallel_conditions = 1);

}  // namespace crowdshield
