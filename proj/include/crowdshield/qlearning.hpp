#pragma once
// Q-value learning over thread traversals: state featurization, the
// claim/stance reward, epsilon-greedy episodes, replay, Bellman targets
// against a pre-update weight snapshot, and MSE training with Adam.

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "crowdshield/encoder.hpp"
#include "crowdshield/rng.hpp"
#include "crowdshield/thread.hpp"

namespace crowdshield {

// content embedding ++ normalized position ++ clipped log time delta
using StateFeatures = std::vector<double>;

struct QNetwork {
  int d_s = 0;
  std::vector<double> weights;  // d_s rows x kNumActions cols, row-major
  std::array<double, kNumActions> bias{};

  static QNetwork zeros(int d_s);
  std::array<double, kNumActions> q_values(std::span<const double> s) const;
};

// ties resolve to the lowest action index
int argmax_action(const std::array<double, kNumActions>& q);

// claim bonus (1 if claim) plus stance term: +1 support/query/root,
// -1 deny, 0 comment. Image is exactly {-1, 0, 1, 2}.
double reward(ClaimLabel claim, Stance action);

StateFeatures state_features(const Thread& t, size_t index, const TextEncoder& enc);
std::vector<StateFeatures> thread_state_features(const Thread& t, const TextEncoder& enc);

struct Transition {
  StateFeatures s;
  int action = 0;
  double r = 0.0;
  std::optional<StateFeatures> s_next;  // nullopt == terminal
};

class ReplayBuffer {
 public:
  explicit ReplayBuffer(size_t capacity);
  void push(Transition tr);
  size_t size() const { return items_.size(); }
  size_t capacity() const { return capacity_; }
  // uniform with replacement over current contents
  const Transition& sample(Rng& rng) const;

 private:
  std::vector<Transition> items_;
  size_t capacity_;
  size_t next_ = 0;
};

struct QTrainConfig {
  int episodes = 1000;
  double discount = 0.2;      // Bellman discount factor
  double explore_rate = 0.2;  // epsilon-greedy exploration probability
  double lr = 0.001;
  int batch = 32;
  size_t buffer_capacity = 10000;
  size_t min_buffer_before_update = 64;
  uint64_t seed = 0;
};

// GoldActions replays the annotated stances instead of acting greedily.
enum class EpisodePolicy { EpsGreedy, GoldActions };

// Visits states 0..n chronologically; actions never alter the transition,
// the thread unfolds regardless. The last node yields a terminal
// transition.
std::vector<Transition> run_episode(const Thread& t, const QNetwork& q, const QTrainConfig& cfg,
                                    Rng& rng, const TextEncoder& enc,
                                    EpisodePolicy policy = EpisodePolicy::EpsGreedy);
// Same traversal over precomputed per-node features (states[j] = node j).
std::vector<Transition> run_episode_with_states(const Thread& t, const QNetwork& q,
                                                const QTrainConfig& cfg, Rng& rng,
                                                const std::vector<StateFeatures>& states,
                                                EpisodePolicy policy = EpisodePolicy::EpsGreedy);

// r + discount * max_a Q(s_next, a); terminal -> r.
double bellman_target(const Transition& tr, const QNetwork& target_net, double discount);

struct QGradients {
  std::vector<double> weights;
  std::array<double, kNumActions> bias{};
};

// Mean squared error between Q(s, a) and the fixed targets.
double qnet_mse_loss(const QNetwork& q, std::span<const Transition> batch,
                     std::span<const double> targets);
QGradients qnet_mse_gradient(const QNetwork& q, std::span<const Transition> batch,
                             std::span<const double> targets);

struct TrainLogRow {
  int episode = 0;
  double loss = 0.0;
  double mean_target = 0.0;
  bool updated = false;
};

struct TrainLog {
  std::vector<TrainLogRow> rows;
};

// One uniformly sampled thread per episode; after each episode, once the
// buffer holds min_buffer_before_update transitions, one batch is sampled
// and targets are computed against the weights as they stood before the
// update. Deterministic given cfg.seed.
std::pair<QNetwork, TrainLog> train_q(const std::vector<Thread>& train, const TextEncoder& enc,
                                      const QTrainConfig& cfg,
                                      EpisodePolicy policy = EpisodePolicy::EpsGreedy);

// Per thread: length n+1 vector, entry j = Q(state_j)[gold action of
// node j]; the source uses the root action.
std::vector<double> thread_q_list(const QNetwork& q, const Thread& t, const TextEncoder& enc);
std::map<std::string, std::vector<double>> export_q_table(const QNetwork& q,
                                                          const std::vector<Thread>& threads,
                                                          const TextEncoder& enc);

void save_qnet(const QNetwork& q, const QTrainConfig& cfg, const std::filesystem::path& path);
QNetwork load_qnet(const std::filesystem::path& path);
void save_trainlog_csv(const TrainLog& log, const std::filesystem::path& path);

}  // namespace crowdshield
