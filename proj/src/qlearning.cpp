#include "crowdshield/qlearning.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "crowdshield/adam.hpp"
#include "crowdshield/error.hpp"

namespace crowdshield {

using nlohmann::json;
using nlohmann::ordered_json;

QNetwork QNetwork::zeros(int d_s) {
  QNetwork q;
  q.d_s = d_s;
  q.weights.assign(static_cast<size_t>(d_s) * kNumActions, 0.0);
  q.bias.fill(0.0);
  return q;
}

std::array<double, kNumActions> QNetwork::q_values(std::span<const double> s) const {
  if (s.size() != static_cast<size_t>(d_s)) {
    throw std::invalid_argument("QNetwork::q_values: feature dimension mismatch");
  }
  std::array<double, kNumActions> out = bias;
  for (size_t i = 0; i < s.size(); ++i) {
    const double si = s[i];
    const size_t row = i * kNumActions;
    for (int a = 0; a < kNumActions; ++a) out[static_cast<size_t>(a)] += weights[row + a] * si;
  }
  return out;
}

int argmax_action(const std::array<double, kNumActions>& q) {
  int best = 0;
  for (int a = 1; a < kNumActions; ++a) {
    if (q[static_cast<size_t>(a)] > q[static_cast<size_t>(best)]) best = a;
  }
  return best;
}

double reward(ClaimLabel claim, Stance action) {
  const double r_claim = claim == ClaimLabel::Claim ? 1.0 : 0.0;
  double r_stance = 0.0;
  switch (action) {
    case Stance::Support:
    case Stance::Query:
    case Stance::Root: r_stance = 1.0; break;
    case Stance::Deny: r_stance = -1.0; break;
    case Stance::Comment: r_stance = 0.0; break;
  }
  return r_claim + r_stance;
}

StateFeatures state_features(const Thread& t, size_t index, const TextEncoder& enc) {
  const size_t n = t.n_replies();
  if (index > n) throw std::out_of_range("state_features: index out of range");
  const Reply& node = t.node(index);

  Embedding e = enc.encode(node.text);
  StateFeatures s = std::move(e.values);
  s.push_back(static_cast<double>(index) / static_cast<double>(n + 1));
  const double dt = static_cast<double>(std::max<int64_t>(0, node.time - t.source.time));
  s.push_back(std::min(1.0, std::log1p(dt) / std::log1p(86400.0)));
  return s;
}

std::vector<StateFeatures> thread_state_features(const Thread& t, const TextEncoder& enc) {
  std::vector<StateFeatures> out;
  out.reserve(t.n_replies() + 1);
  for (size_t j = 0; j <= t.n_replies(); ++j) out.push_back(state_features(t, j, enc));
  return out;
}

ReplayBuffer::ReplayBuffer(size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw std::invalid_argument("ReplayBuffer: capacity must be positive");
  items_.reserve(std::min<size_t>(capacity, 4096));
}

void ReplayBuffer::push(Transition tr) {
  if (items_.size() < capacity_) {
    items_.push_back(std::move(tr));
  } else {
    items_[next_] = std::move(tr);
    next_ = (next_ + 1) % capacity_;
  }
}

const Transition& ReplayBuffer::sample(Rng& rng) const {
  if (items_.empty()) throw std::logic_error("ReplayBuffer::sample: empty buffer");
  return items_[rng.uniform_index(items_.size())];
}

std::vector<Transition> run_episode_with_states(const Thread& t, const QNetwork& q,
                                                const QTrainConfig& cfg, Rng& rng,
                                                const std::vector<StateFeatures>& states,
                                                EpisodePolicy policy) {
  const size_t n = t.n_replies();
  if (states.size() != n + 1) {
    throw std::invalid_argument("run_episode_with_states: states must cover nodes 0..n");
  }
  std::vector<Transition> out;
  out.reserve(n + 1);
  for (size_t j = 0; j <= n; ++j) {
    const Reply& node = t.node(j);
    int action;
    if (policy == EpisodePolicy::GoldActions) {
      action = static_cast<int>(node.stance);
    } else if (rng.uniform() < cfg.explore_rate) {
      action = static_cast<int>(rng.uniform_index(kNumActions));
    } else {
      action = argmax_action(q.q_values(states[j]));
    }
    Transition tr;
    tr.s = states[j];
    tr.action = action;
    tr.r = reward(node.claim, static_cast<Stance>(action));
    if (j < n) tr.s_next = states[j + 1];
    out.push_back(std::move(tr));
  }
  return out;
}

std::vector<Transition> run_episode(const Thread& t, const QNetwork& q, const QTrainConfig& cfg,
                                    Rng& rng, const TextEncoder& enc, EpisodePolicy policy) {
  const auto states = thread_state_features(t, enc);
  return run_episode_with_states(t, q, cfg, rng, states, policy);
}

double bellman_target(const Transition& tr, const QNetwork& target_net, double discount) {
  if (!tr.s_next) return tr.r;
  const auto q = target_net.q_values(*tr.s_next);
  return tr.r + discount * *std::max_element(q.begin(), q.end());
}

double qnet_mse_loss(const QNetwork& q, std::span<const Transition> batch,
                     std::span<const double> targets) {
  if (batch.size() != targets.size() || batch.empty()) {
    throw std::invalid_argument("qnet_mse_loss: batch/target size mismatch");
  }
  double loss = 0.0;
  for (size_t i = 0; i < batch.size(); ++i) {
    const double pred = q.q_values(batch[i].s)[static_cast<size_t>(batch[i].action)];
    const double d = targets[i] - pred;
    loss += d * d;
  }
  return loss / static_cast<double>(batch.size());
}

QGradients qnet_mse_gradient(const QNetwork& q, std::span<const Transition> batch,
                             std::span<const double> targets) {
  if (batch.size() != targets.size() || batch.empty()) {
    throw std::invalid_argument("qnet_mse_gradient: batch/target size mismatch");
  }
  QGradients g;
  g.weights.assign(q.weights.size(), 0.0);
  g.bias.fill(0.0);
  const double scale = 2.0 / static_cast<double>(batch.size());
  for (size_t i = 0; i < batch.size(); ++i) {
    const Transition& tr = batch[i];
    const size_t a = static_cast<size_t>(tr.action);
    const double pred = q.q_values(tr.s)[a];
    const double coeff = scale * (pred - targets[i]);
    for (size_t f = 0; f < tr.s.size(); ++f) {
      g.weights[f * kNumActions + a] += coeff * tr.s[f];
    }
    g.bias[a] += coeff;
  }
  return g;
}

namespace {

// flat layout: W then b
std::vector<double> flatten(const QNetwork& q) {
  std::vector<double> params = q.weights;
  params.insert(params.end(), q.bias.begin(), q.bias.end());
  return params;
}

void unflatten(std::span<const double> params, QNetwork& q) {
  std::copy(params.begin(), params.begin() + static_cast<long>(q.weights.size()),
            q.weights.begin());
  std::copy(params.begin() + static_cast<long>(q.weights.size()), params.end(), q.bias.begin());
}

}  // namespace

std::pair<QNetwork, TrainLog> train_q(const std::vector<Thread>& train, const TextEncoder& enc,
                                      const QTrainConfig& cfg, EpisodePolicy policy) {
  if (train.empty()) throw std::invalid_argument("train_q: empty training set");
  if (cfg.episodes < 0) throw std::invalid_argument("train_q: episodes must be >= 0");
  if (cfg.batch <= 0) throw std::invalid_argument("train_q: batch must be positive");

  QNetwork q = QNetwork::zeros(enc.dim() + 2);
  TrainLog log;
  if (cfg.episodes == 0) return {q, log};

  std::vector<std::vector<StateFeatures>> cache;
  cache.reserve(train.size());
  for (const auto& t : train) cache.push_back(thread_state_features(t, enc));

  ReplayBuffer buffer(cfg.buffer_capacity);
  Rng rng(cfg.seed);
  std::vector<double> params = flatten(q);
  AdamState adam(params.size());

  for (int ep = 1; ep <= cfg.episodes; ++ep) {
    const size_t ti = rng.uniform_index(train.size());
    for (auto& tr : run_episode_with_states(train[ti], q, cfg, rng, cache[ti], policy)) {
      buffer.push(std::move(tr));
    }

    TrainLogRow row;
    row.episode = ep;
    if (buffer.size() >= cfg.min_buffer_before_update) {
      std::vector<Transition> batch;
      batch.reserve(static_cast<size_t>(cfg.batch));
      for (int i = 0; i < cfg.batch; ++i) batch.push_back(buffer.sample(rng));

      // targets against the weights as they stand before this update
      std::vector<double> targets;
      targets.reserve(batch.size());
      double target_sum = 0.0;
      for (const auto& tr : batch) {
        targets.push_back(bellman_target(tr, q, cfg.discount));
        target_sum += targets.back();
      }

      row.loss = qnet_mse_loss(q, batch, targets);
      row.mean_target = target_sum / static_cast<double>(batch.size());
      row.updated = true;

      const QGradients g = qnet_mse_gradient(q, batch, targets);
      std::vector<double> grads = g.weights;
      grads.insert(grads.end(), g.bias.begin(), g.bias.end());
      adam.update(params, grads, cfg.lr);
      unflatten(params, q);
    }
    log.rows.push_back(row);
  }
  return {q, log};
}

std::vector<double> thread_q_list(const QNetwork& q, const Thread& t, const TextEncoder& enc) {
  std::vector<double> out;
  out.reserve(t.n_replies() + 1);
  for (size_t j = 0; j <= t.n_replies(); ++j) {
    const auto values = q.q_values(state_features(t, j, enc));
    out.push_back(values[static_cast<size_t>(t.node(j).stance)]);
  }
  return out;
}

std::map<std::string, std::vector<double>> export_q_table(const QNetwork& q,
                                                          const std::vector<Thread>& threads,
                                                          const TextEncoder& enc) {
  std::map<std::string, std::vector<double>> out;
  for (const auto& t : threads) out[t.thread_id] = thread_q_list(q, t, enc);
  return out;
}

void save_qnet(const QNetwork& q, const QTrainConfig& cfg, const std::filesystem::path& path) {
  ordered_json j;
  j["format"] = "crowdshield-qnet/1";
  j["d_s"] = q.d_s;
  j["actions"] = kNumActions;
  j["W"] = q.weights;
  j["b"] = q.bias;
  ordered_json c;
  c["episodes"] = cfg.episodes;
  c["discount"] = cfg.discount;
  c["explore_rate"] = cfg.explore_rate;
  c["lr"] = cfg.lr;
  c["batch"] = cfg.batch;
  c["buffer_capacity"] = cfg.buffer_capacity;
  c["min_buffer_before_update"] = cfg.min_buffer_before_update;
  c["seed"] = cfg.seed;
  j["config"] = c;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write checkpoint: " + path.string());
  out << j.dump(2) << "\n";
}

QNetwork load_qnet(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open checkpoint: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DataError("malformed checkpoint " + path.string() + ": " + e.what());
  }
  if (j.value("format", "") != "crowdshield-qnet/1") {
    throw DataError("unexpected checkpoint format in " + path.string());
  }
  QNetwork q;
  q.d_s = j.at("d_s").get<int>();
  q.weights = j.at("W").get<std::vector<double>>();
  const auto b = j.at("b").get<std::vector<double>>();
  if (j.at("actions").get<int>() != kNumActions || b.size() != kNumActions ||
      q.weights.size() != static_cast<size_t>(q.d_s) * kNumActions) {
    throw DataError("inconsistent checkpoint shapes in " + path.string());
  }
  std::copy(b.begin(), b.end(), q.bias.begin());
  return q;
}

void save_trainlog_csv(const TrainLog& log, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write train log: " + path.string());
  out << "episode,loss,mean_target,updated\n";
  char buf[128];
  for (const auto& row : log.rows) {
    std::snprintf(buf, sizeof(buf), "%d,%.9g,%.9g,%d\n", row.episode, row.loss, row.mean_target,
                  row.updated ? 1 : 0);
    out << buf;
  }
}

}  // namespace crowdshield
