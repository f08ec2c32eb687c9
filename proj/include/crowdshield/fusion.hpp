#pragma once
// Per-thread feature construction: padded Q-feature vector, binary claim
// vector, claim weighting, and concatenation with the text embedding.

#include <vector>

#include "crowdshield/encoder.hpp"
#include "crowdshield/thread.hpp"

namespace crowdshield {

struct FusionConfig {
  double alpha = 2.0;  // claim weight
  int L = 64;          // fixed Q-block length
  // weight = alpha * c_j (zeroing non-claims) instead of the default
  // (c_j ? alpha : 1); kept for compatibility with the literal formula.
  bool literal_weighting = false;
};

using FusedVector = std::vector<double>;

// q_list truncated to L or right-padded with zeros.
std::vector<double> q_feature_vector(const std::vector<double>& q_list, int L);

// Index 0 is the source post (claim defaults to 1); index j is reply j.
std::vector<int> claim_vector(const Thread& t, int L);

std::vector<double> claim_weights(const std::vector<int>& c, double alpha, bool literal = false);

// claim_weights(c, alpha) ⊙ F, concatenated with S.
FusedVector fuse(const std::vector<double>& F, const std::vector<int>& c, double alpha,
                 const Embedding& S, bool literal = false);

}  // namespace crowdshield
