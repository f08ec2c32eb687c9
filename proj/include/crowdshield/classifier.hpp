#pragma once
// Final misinformation classifier: two-class linear layer with softmax,
// mini-batch cross-entropy training, early stopping on dev macro-F1.

#include <array>
#include <filesystem>
#include <span>
#include <vector>

#include "crowdshield/thread.hpp"

namespace crowdshield {

struct LinearClassifier {
  int dim = 0;
  std::vector<double> weights;  // 2 x dim row-major (row = class)
  std::array<double, 2> bias{};

  // uniform(-0.01, 0.01), seeded
  static LinearClassifier init(int dim, uint64_t seed);

  // class 0 = non-misinformation, class 1 = misinformation
  std::array<double, 2> probabilities(std::span<const double> v) const;
  // tie resolves to non-misinformation
  std::pair<VeracityLabel, std::array<double, 2>> predict(std::span<const double> v) const;
};

struct ClfTrainConfig {
  int epochs = 20;
  int patience = 3;
  double lr = 0.001;
  int batch = 8;
  uint64_t seed = 0;
  bool class_weighting = false;  // inverse-frequency loss weights, off by default
};

struct ClfGradients {
  std::vector<double> weights;
  std::array<double, 2> bias{};
};

double clf_ce_loss(const LinearClassifier& m, std::span<const std::vector<double>> X,
                   std::span<const VeracityLabel> y,
                   const std::array<double, 2>& class_weight = {1.0, 1.0});
ClfGradients clf_ce_gradient(const LinearClassifier& m, std::span<const std::vector<double>> X,
                             std::span<const VeracityLabel> y,
                             const std::array<double, 2>& class_weight = {1.0, 1.0});

struct EpochRow {
  int epoch = 0;
  double train_loss = 0.0;
  double dev_macro_f1 = 0.0;
};

struct TrainHistory {
  std::vector<EpochRow> rows;
};

// Keeps the best-scoring parameters by dev macro-F1; stops after
// `patience` epochs without improvement. Deterministic given cfg.seed.
std::pair<LinearClassifier, TrainHistory> train_classifier(
    std::span<const std::vector<double>> X, std::span<const VeracityLabel> y,
    std::span<const std::vector<double>> X_dev, std::span<const VeracityLabel> y_dev,
    const ClfTrainConfig& cfg);

void save_clf(const LinearClassifier& m, const std::filesystem::path& path);
LinearClassifier load_clf(const std::filesystem::path& path);
void save_history_csv(const TrainHistory& h, const std::filesystem::path& path);

}  // namespace crowdshield
