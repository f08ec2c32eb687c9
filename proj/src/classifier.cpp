#include "crowdshield/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "crowdshield/adam.hpp"
#include "crowdshield/error.hpp"
#include "crowdshield/metrics.hpp"
#include "crowdshield/rng.hpp"

namespace crowdshield {

using nlohmann::json;
using nlohmann::ordered_json;

LinearClassifier LinearClassifier::init(int dim, uint64_t seed) {
  if (dim <= 0) throw std::invalid_argument("LinearClassifier::init: dim must be positive");
  LinearClassifier m;
  m.dim = dim;
  m.weights.resize(static_cast<size_t>(2) * dim);
  Rng rng(seed);
  for (double& w : m.weights) w = rng.uniform_range(-0.01, 0.01);
  m.bias = {rng.uniform_range(-0.01, 0.01), rng.uniform_range(-0.01, 0.01)};
  return m;
}

std::array<double, 2> LinearClassifier::probabilities(std::span<const double> v) const {
  if (v.size() != static_cast<size_t>(dim)) {
    throw std::invalid_argument("LinearClassifier: feature dimension mismatch");
  }
  std::array<double, 2> logits = bias;
  for (size_t i = 0; i < v.size(); ++i) {
    logits[0] += weights[i] * v[i];
    logits[1] += weights[static_cast<size_t>(dim) + i] * v[i];
  }
  const double m = std::max(logits[0], logits[1]);
  const double e0 = std::exp(logits[0] - m);
  const double e1 = std::exp(logits[1] - m);
  const double z = e0 + e1;
  return {e0 / z, e1 / z};
}

std::pair<VeracityLabel, std::array<double, 2>> LinearClassifier::predict(
    std::span<const double> v) const {
  const auto probs = probabilities(v);
  const VeracityLabel label =
      probs[1] > probs[0] ? VeracityLabel::Misinformation : VeracityLabel::NonMisinformation;
  return {label, probs};
}

double clf_ce_loss(const LinearClassifier& m, std::span<const std::vector<double>> X,
                   std::span<const VeracityLabel> y, const std::array<double, 2>& class_weight) {
  if (X.size() != y.size() || X.empty()) {
    throw std::invalid_argument("clf_ce_loss: batch size mismatch or empty");
  }
  double loss = 0.0;
  for (size_t i = 0; i < X.size(); ++i) {
    const auto probs = m.probabilities(X[i]);
    const size_t gold = static_cast<size_t>(y[i]);
    loss += -class_weight[gold] * std::log(std::max(probs[gold], 1e-300));
  }
  return loss / static_cast<double>(X.size());
}

ClfGradients clf_ce_gradient(const LinearClassifier& m, std::span<const std::vector<double>> X,
                             std::span<const VeracityLabel> y,
                             const std::array<double, 2>& class_weight) {
  if (X.size() != y.size() || X.empty()) {
    throw std::invalid_argument("clf_ce_gradient: batch size mismatch or empty");
  }
  ClfGradients g;
  g.weights.assign(m.weights.size(), 0.0);
  g.bias.fill(0.0);
  const double scale = 1.0 / static_cast<double>(X.size());
  for (size_t i = 0; i < X.size(); ++i) {
    const auto probs = m.probabilities(X[i]);
    const size_t gold = static_cast<size_t>(y[i]);
    const double w = class_weight[gold] * scale;
    for (size_t c = 0; c < 2; ++c) {
      const double dlogit = w * (probs[c] - (c == gold ? 1.0 : 0.0));
      for (size_t f = 0; f < X[i].size(); ++f) {
        g.weights[c * static_cast<size_t>(m.dim) + f] += dlogit * X[i][f];
      }
      g.bias[c] += dlogit;
    }
  }
  return g;
}

namespace {

std::array<double, 2> class_weights_for(std::span<const VeracityLabel> y, bool enabled) {
  if (!enabled) return {1.0, 1.0};
  double n0 = 0, n1 = 0;
  for (const auto label : y) (label == VeracityLabel::NonMisinformation ? n0 : n1) += 1.0;
  const double n = n0 + n1;
  // inverse frequency, normalized so weights average to 1
  return {n0 > 0 ? n / (2.0 * n0) : 0.0, n1 > 0 ? n / (2.0 * n1) : 0.0};
}

}  // namespace

std::pair<LinearClassifier, TrainHistory> train_classifier(
    std::span<const std::vector<double>> X, std::span<const VeracityLabel> y,
    std::span<const std::vector<double>> X_dev, std::span<const VeracityLabel> y_dev,
    const ClfTrainConfig& cfg) {
  if (X.empty()) throw std::invalid_argument("train_classifier: empty training set");
  if (X.size() != y.size()) throw std::invalid_argument("train_classifier: X/y size mismatch");
  if (X_dev.empty()) throw std::invalid_argument("train_classifier: empty dev set");
  if (X_dev.size() != y_dev.size()) {
    throw std::invalid_argument("train_classifier: dev X/y size mismatch");
  }
  if (cfg.batch <= 0) throw std::invalid_argument("train_classifier: batch must be positive");
  if (cfg.patience > cfg.epochs) {
    throw std::invalid_argument("train_classifier: patience must not exceed epochs");
  }
  const size_t dim = X.front().size();
  for (const auto& v : X) {
    if (v.size() != dim) throw std::invalid_argument("train_classifier: inconsistent feature dim");
  }
  for (const auto& v : X_dev) {
    if (v.size() != dim) throw std::invalid_argument("train_classifier: inconsistent dev dim");
  }

  LinearClassifier model = LinearClassifier::init(static_cast<int>(dim), cfg.seed);
  TrainHistory history;
  if (cfg.epochs == 0) return {model, history};

  const std::array<double, 2> cw = class_weights_for(y, cfg.class_weighting);

  std::vector<double> params = model.weights;
  params.insert(params.end(), model.bias.begin(), model.bias.end());
  AdamState adam(params.size());
  Rng rng(cfg.seed);

  auto sync_model = [&]() {
    std::copy(params.begin(), params.begin() + static_cast<long>(model.weights.size()),
              model.weights.begin());
    model.bias[0] = params[model.weights.size()];
    model.bias[1] = params[model.weights.size() + 1];
  };

  auto dev_score = [&]() {
    std::vector<VeracityLabel> preds;
    preds.reserve(X_dev.size());
    for (const auto& v : X_dev) preds.push_back(model.predict(v).first);
    return macro_f1(y_dev, preds);
  };

  LinearClassifier best = model;
  double best_f1 = -1.0;
  int stale_epochs = 0;

  std::vector<size_t> order(X.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;

  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    rng.shuffle(order);
    double loss_sum = 0.0;
    size_t n_batches = 0;
    for (size_t start = 0; start < order.size(); start += static_cast<size_t>(cfg.batch)) {
      const size_t end = std::min(order.size(), start + static_cast<size_t>(cfg.batch));
      std::vector<std::vector<double>> bx;
      std::vector<VeracityLabel> by;
      bx.reserve(end - start);
      by.reserve(end - start);
      for (size_t i = start; i < end; ++i) {
        bx.push_back(X[order[i]]);
        by.push_back(y[order[i]]);
      }
      loss_sum += clf_ce_loss(model, bx, by, cw);
      const ClfGradients g = clf_ce_gradient(model, bx, by, cw);
      std::vector<double> grads = g.weights;
      grads.insert(grads.end(), g.bias.begin(), g.bias.end());
      adam.update(params, grads, cfg.lr);
      sync_model();
      ++n_batches;
    }

    EpochRow row;
    row.epoch = epoch;
    row.train_loss = n_batches ? loss_sum / static_cast<double>(n_batches) : 0.0;
    row.dev_macro_f1 = dev_score();
    history.rows.push_back(row);

    if (row.dev_macro_f1 > best_f1) {
      best_f1 = row.dev_macro_f1;
      best = model;
      stale_epochs = 0;
    } else {
      ++stale_epochs;
      if (stale_epochs >= cfg.patience) break;
    }
  }
  return {best, history};
}

void save_clf(const LinearClassifier& m, const std::filesystem::path& path) {
  ordered_json j;
  j["format"] = "crowdshield-clf/1";
  j["dim"] = m.dim;
  j["W"] = m.weights;
  j["b"] = m.bias;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write checkpoint: " + path.string());
  out << j.dump(2) << "\n";
}

LinearClassifier load_clf(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open checkpoint: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DataError("malformed checkpoint " + path.string() + ": " + e.what());
  }
  if (j.value("format", "") != "crowdshield-clf/1") {
    throw DataError("unexpected checkpoint format in " + path.string());
  }
  LinearClassifier m;
  m.dim = j.at("dim").get<int>();
  m.weights = j.at("W").get<std::vector<double>>();
  const auto b = j.at("b").get<std::vector<double>>();
  if (b.size() != 2 || m.weights.size() != static_cast<size_t>(2) * m.dim) {
    throw DataError("inconsistent checkpoint shapes in " + path.string());
  }
  m.bias = {b[0], b[1]};
  return m;
}

void save_history_csv(const TrainHistory& h, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write history: " + path.string());
  out << "epoch,train_loss,dev_macro_f1\n";
  char buf[128];
  for (const auto& row : h.rows) {
    std::snprintf(buf, sizeof(buf), "%d,%.9g,%.9g\n", row.epoch, row.train_loss, row.dev_macro_f1);
    out << buf;
  }
}

}  // namespace crowdshield
