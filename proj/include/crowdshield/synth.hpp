#pragma once
// Seeded synthetic conversation-thread generator. Stance distributions are
// conditioned on veracity so the label signal travels through reply
// structure; token pools are per stance, and may overlap to starve the
// text channel of signal.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "crowdshield/thread.hpp"

namespace crowdshield {

// probabilities over (support, deny, query, comment)
struct StanceDist {
  std::array<double, 4> p{0.25, 0.25, 0.25, 0.25};
};

struct SynthConfig {
  int n_threads = 200;
  int replies_min = 6;
  int replies_max = 20;
  double misinfo_fraction = 0.25;
  StanceDist stance_misinfo{{0.15, 0.45, 0.15, 0.25}};
  StanceDist stance_nonmisinfo{{0.45, 0.15, 0.15, 0.25}};
  // per reply stance (support, deny, query, comment)
  std::array<double, 4> claim_rate{0.5, 0.5, 0.3, 0.3};
  // pools[stance] for replies; pool_root for source posts
  std::vector<std::string> pool_root;
  std::array<std::vector<std::string>, 4> pools;
  int tokens_min = 3;
  int tokens_max = 8;
  // parent = uniform earlier node with this probability, else the
  // chronologically previous node
  double branching_prob = 0.3;
  // when > 0, replies at chronological index > signal_window draw from
  // stance_late for both veracity classes
  int signal_window = 0;
  StanceDist stance_late{{0.0, 0.0, 0.0, 1.0}};
  double test_fraction = 0.2;
  double gap_mean_seconds = 60.0;
  uint64_t seed = 0;
};

// Built-in token pools, distinct per stance.
SynthConfig default_synth_config();

// Deterministic given cfg.seed; every generated thread passes
// validate_thread and timestamps increase strictly.
Dataset generate_dataset(const SynthConfig& cfg);

}  // namespace crowdshield
