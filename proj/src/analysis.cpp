#include "crowdshield/analysis.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

#include "crowdshield/error.hpp"

namespace crowdshield {

DatasetStats dataset_stats(const Dataset& d) {
  DatasetStats stats;
  for (const auto& t : d.threads) {
    auto it = d.split.find(t.thread_id);
    SplitStats& s = (it != d.split.end() && it->second == Split::Test) ? stats.test : stats.train;
    (t.veracity == VeracityLabel::Misinformation ? s.mis : s.non_mis) += 1;
    for (const auto& r : t.replies) {
      s.stance_counts[static_cast<size_t>(r.stance)] += 1;
      s.replies += 1;
    }
    stats.threads += 1;
    stats.replies += static_cast<int64_t>(t.n_replies());
  }
  return stats;
}

int64_t TransitionMatrix::total() const {
  int64_t sum = 0;
  for (const auto& row : counts) {
    for (int64_t c : row) sum += c;
  }
  return sum;
}

TransitionMatrix stance_transitions(const Dataset& d, VeracityFilter filter, bool chronological) {
  TransitionMatrix m;
  for (const auto& t : d.threads) {
    if (filter == VeracityFilter::Misinformation &&
        t.veracity != VeracityLabel::Misinformation) {
      continue;
    }
    if (filter == VeracityFilter::NonMisinformation &&
        t.veracity != VeracityLabel::NonMisinformation) {
      continue;
    }
    if (chronological) {
      Stance prev = Stance::Root;
      for (const auto& r : t.replies) {
        m.counts[static_cast<size_t>(prev)][static_cast<size_t>(r.stance)] += 1;
        prev = r.stance;
      }
    } else {
      std::map<std::string, Stance> stance_of;
      stance_of[t.source.id] = Stance::Root;
      for (const auto& r : t.replies) stance_of[r.id] = r.stance;
      for (const auto& r : t.replies) {
        auto it = stance_of.find(r.parent_id);
        const Stance from = it == stance_of.end() ? Stance::Root : it->second;
        m.counts[static_cast<size_t>(from)][static_cast<size_t>(r.stance)] += 1;
      }
    }
  }
  return m;
}

std::array<std::array<int64_t, 2>, 4> stance_claim_matrix(const Dataset& d) {
  std::array<std::array<int64_t, 2>, 4> m{};
  for (const auto& t : d.threads) {
    for (const auto& r : t.replies) {
      m[static_cast<size_t>(r.stance)][r.claim == ClaimLabel::Claim ? 1 : 0] += 1;
    }
  }
  return m;
}

double cohens_kappa(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.empty()) throw std::invalid_argument("cohens_kappa: empty input");
  if (a.size() != b.size()) throw std::invalid_argument("cohens_kappa: length mismatch");

  std::map<std::string, std::pair<int64_t, int64_t>> marginals;  // label -> (count_a, count_b)
  int64_t agree = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) ++agree;
    marginals[a[i]].first += 1;
    marginals[b[i]].second += 1;
  }
  const double n = static_cast<double>(a.size());
  const double p_o = static_cast<double>(agree) / n;
  double p_e = 0.0;
  for (const auto& [label, counts] : marginals) {
    p_e += (static_cast<double>(counts.first) / n) * (static_cast<double>(counts.second) / n);
  }
  if (p_e >= 1.0) return 1.0;  // both raters constant and identical
  return (p_o - p_e) / (1.0 - p_e);
}

namespace {
const char* kStanceNames[5] = {"support", "deny", "query", "comment", "root"};
}

void save_stats_csv(const DatasetStats& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write stats: " + path.string());
  out << "split,label,count\n";
  auto emit = [&](const char* split, const SplitStats& ss) {
    out << split << ",misinformation," << ss.mis << "\n";
    out << split << ",non-misinformation," << ss.non_mis << "\n";
    for (int i = 0; i < 4; ++i) {
      out << split << ",stance-" << kStanceNames[i] << "," << ss.stance_counts[static_cast<size_t>(i)]
          << "\n";
    }
    out << split << ",replies," << ss.replies << "\n";
  };
  emit("train", s.train);
  emit("test", s.test);
}

void save_transitions_csv(const TransitionMatrix& mis, const TransitionMatrix& non_mis,
                          const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write transitions: " + path.string());
  out << "from,to,veracity,count\n";
  auto emit = [&](const TransitionMatrix& m, const char* veracity) {
    for (int f = 0; f < 5; ++f) {
      for (int to = 0; to < 4; ++to) {
        out << kStanceNames[f] << "," << kStanceNames[to] << "," << veracity << ","
            << m.counts[static_cast<size_t>(f)][static_cast<size_t>(to)] << "\n";
      }
    }
  };
  emit(mis, "misinformation");
  emit(non_mis, "non-misinformation");
}

void save_stance_claim_csv(const std::array<std::array<int64_t, 2>, 4>& m,
                           const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write stance-claim matrix: " + path.string());
  out << "stance,claim,count\n";
  for (int s = 0; s < 4; ++s) {
    out << kStanceNames[s] << ",non-claim," << m[static_cast<size_t>(s)][0] << "\n";
    out << kStanceNames[s] << ",claim," << m[static_cast<size_t>(s)][1] << "\n";
  }
}

}  // namespace crowdshield
