#pragma once
// Corpus analytics: split statistics, stance-transition flows over reply
// edges, stance-claim co-occurrence, and Cohen's kappa.

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

#include "crowdshield/thread.hpp"

namespace crowdshield {

struct SplitStats {
  int64_t mis = 0;
  int64_t non_mis = 0;
  // support, deny, query, comment over replies
  std::array<int64_t, 4> stance_counts{};
  int64_t replies = 0;
};

struct DatasetStats {
  SplitStats train;
  SplitStats test;
  int64_t threads = 0;
  int64_t replies = 0;
};

DatasetStats dataset_stats(const Dataset& d);

enum class VeracityFilter { All, Misinformation, NonMisinformation };

struct TransitionMatrix {
  // counts[from: 5 stances][to: 4 reply stances]
  std::array<std::array<int64_t, 4>, 5> counts{};
  int64_t total() const;
};

// Tree edges (parent -> child) by default; with chronological=true each
// reply instead follows its chronological predecessor (the source first).
TransitionMatrix stance_transitions(const Dataset& d,
                                    VeracityFilter filter = VeracityFilter::All,
                                    bool chronological = false);

// counts[reply stance][{non-claim, claim}]
std::array<std::array<int64_t, 2>, 4> stance_claim_matrix(const Dataset& d);

// kappa = (p_o - p_e) / (1 - p_e); two constant identical raters give 1.
double cohens_kappa(std::span<const std::string> a, std::span<const std::string> b);

void save_stats_csv(const DatasetStats& s, const std::filesystem::path& path);
void save_transitions_csv(const TransitionMatrix& mis, const TransitionMatrix& non_mis,
                          const std::filesystem::path& path);
void save_stance_claim_csv(const std::array<std::array<int64_t, 2>, 4>& m,
                           const std::filesystem::path& path);

}  // namespace crowdshield
