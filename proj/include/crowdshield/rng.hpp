#pragma once
// Deterministic random source (splitmix64) plus the stable sub-seed
// derivation that fans one global seed out to pipeline components.
// All sampling goes through this class so runs are reproducible
// bit-for-bit regardless of platform or standard library.

#include <cstdint>
#include <string_view>
#include <vector>

namespace crowdshield {

uint64_t splitmix64_mix(uint64_t x);
uint64_t fnv1a64(std::string_view bytes, uint64_t basis);

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64();

  // [0, 1)
  double uniform();
  // [0, n), n > 0
  size_t uniform_index(size_t n);
  double uniform_range(double lo, double hi);
  // standard normal, Box-Muller with cached spare
  double normal();
  double exponential(double mean);
  bool bernoulli(double p);

  // Fisher-Yates
  template <typename T>
  void shuffle(std::vector<T>& v) {
    if (v.size() < 2) return;
    for (size_t i = v.size() - 1; i > 0; --i) {
      std::swap(v[i], v[uniform_index(i + 1)]);
    }
  }

 private:
  uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Stable hash of the component name mixed with the global seed; documented
// so sub-seeds can be reproduced outside the binary.
uint64_t derive_seed(uint64_t global_seed, std::string_view component);

}  // namespace crowdshield
