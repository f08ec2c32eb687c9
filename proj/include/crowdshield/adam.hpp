#pragma once
// Adam over a flat parameter vector, shared by the Q-network and the
// classifier trainers.

#include <cstdint>
#include <span>
#include <vector>

namespace crowdshield {

struct AdamConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

class AdamState {
 public:
  explicit AdamState(size_t n_params, AdamConfig cfg = {});

  // One step of bias-corrected Adam; params and grads must match the
  // construction size.
  void update(std::span<double> params, std::span<const double> grads, double lr);

  int64_t step_count() const { return step_; }

 private:
  std::vector<double> m_;
  std::vector<double> v_;
  int64_t step_ = 0;
  AdamConfig cfg_;
};

}  // namespace crowdshield
