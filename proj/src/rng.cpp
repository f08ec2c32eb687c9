#include "crowdshield/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace crowdshield {

uint64_t splitmix64_mix(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

uint64_t fnv1a64(std::string_view bytes, uint64_t basis) {
  uint64_t h = basis;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return splitmix64_mix(state_);
}

double Rng::uniform() {
  // 53 mantissa bits
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

size_t Rng::uniform_index(size_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: n must be > 0");
  // Lemire's multiply-shift; bias is negligible and fully deterministic.
  unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
  return static_cast<size_t>(m >> 64);
}

double Rng::uniform_range(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  double u2 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * 3.14159265358979323846 * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

double Rng::exponential(double mean) {
  double u = uniform();
  while (u <= 0.0) u = uniform();
  return -mean * std::log(u);
}

bool Rng::bernoulli(double p) { return uniform() < p; }

uint64_t derive_seed(uint64_t global_seed, std::string_view component) {
  const uint64_t name_hash = fnv1a64(component, 0xcbf29ce484222325ULL);
  return splitmix64_mix(name_hash ^ splitmix64_mix(global_seed));
}

}  // namespace crowdshield
