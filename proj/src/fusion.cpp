#include "crowdshield/fusion.hpp"

#include <stdexcept>

namespace crowdshield {

std::vector<double> q_feature_vector(const std::vector<double>& q_list, int L) {
  if (L <= 0) throw std::invalid_argument("q_feature_vector: L must be positive");
  std::vector<double> out(static_cast<size_t>(L), 0.0);
  const size_t keep = std::min(q_list.size(), static_cast<size_t>(L));
  for (size_t i = 0; i < keep; ++i) out[i] = q_list[i];
  return out;
}

std::vector<int> claim_vector(const Thread& t, int L) {
  if (L <= 0) throw std::invalid_argument("claim_vector: L must be positive");
  std::vector<int> out(static_cast<size_t>(L), 0);
  const size_t n_entries = std::min(t.n_replies() + 1, static_cast<size_t>(L));
  for (size_t j = 0; j < n_entries; ++j) {
    out[j] = t.node(j).claim == ClaimLabel::Claim ? 1 : 0;
  }
  return out;
}

std::vector<double> claim_weights(const std::vector<int>& c, double alpha, bool literal) {
  std::vector<double> out(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    if (literal) {
      out[i] = alpha * c[i];
    } else {
      out[i] = c[i] ? alpha : 1.0;
    }
  }
  return out;
}

FusedVector fuse(const std::vector<double>& F, const std::vector<int>& c, double alpha,
                 const Embedding& S, bool literal) {
  if (F.size() != c.size()) throw std::invalid_argument("fuse: F and c length mismatch");
  const std::vector<double> w = claim_weights(c, alpha, literal);
  FusedVector out;
  out.reserve(F.size() + S.values.size());
  for (size_t i = 0; i < F.size(); ++i) out.push_back(w[i] * F[i]);
  out.insert(out.end(), S.values.begin(), S.values.end());
  return out;
}

}  // namespace crowdshield
