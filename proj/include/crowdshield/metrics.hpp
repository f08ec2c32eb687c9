#pragma once
// Per-class precision/recall/F1 and macro-F1; report containers and
// JSON/CSV emission for external plotting.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "crowdshield/thread.hpp"

namespace crowdshield {

struct Confusion {
  int64_t tp = 0;
  int64_t fp = 0;
  int64_t fn = 0;
  int64_t tn = 0;
};

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Zero denominators yield 0 for the affected quantity.
ClassMetrics prf(const Confusion& conf);

Confusion confusion_for(std::span<const VeracityLabel> golds, std::span<const VeracityLabel> preds,
                        VeracityLabel cls);

double macro_f1(std::span<const VeracityLabel> golds, std::span<const VeracityLabel> preds);

struct EvalReport {
  std::string condition;  // "full", "tau=10", "alpha=2", "no_q", ...
  ClassMetrics non_mis;
  ClassMetrics mis;
  double macro_f1 = 0.0;
  int64_t n = 0;
};

EvalReport make_report(const std::string& condition, std::span<const VeracityLabel> golds,
                       std::span<const VeracityLabel> preds);

std::string reports_to_json(std::span<const EvalReport> reports);
void save_reports_json(std::span<const EvalReport> reports, const std::filesystem::path& path);
void save_reports_csv(std::span<const EvalReport> reports, const std::filesystem::path& path);

}  // namespace crowdshield
