#pragma once
// Versioned JSON run configuration (crowdshield-config/1) with defaults
// mirroring the reference experimental setup. CLI flags override file
// values.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "crowdshield/pipeline.hpp"
#include "crowdshield/synth.hpp"

namespace crowdshield {

struct RunConfig {
  uint64_t seed = 42;
  std::string data_path;
  std::string data_format = "native-jsonl";
  std::string claim_sidecar;
  PipelineConfig pipeline;
  std::vector<Milestone> milestones = {{10}, {20}, {30}, {std::nullopt}};
  bool retrain_per_milestone = false;
  std::vector<double> alphas = {1.0, 2.0, 3.0};
  SynthConfig synth = default_synth_config();
};

RunConfig load_run_config(const std::filesystem::path& path);
void save_run_config(const RunConfig& cfg, const std::filesystem::path& path);

}  // namespace crowdshield
