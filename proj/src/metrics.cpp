#include "crowdshield/metrics.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "crowdshield/error.hpp"

namespace crowdshield {

using nlohmann::ordered_json;

ClassMetrics prf(const Confusion& conf) {
  ClassMetrics m;
  const double tp = static_cast<double>(conf.tp);
  if (conf.tp + conf.fp > 0) m.precision = tp / static_cast<double>(conf.tp + conf.fp);
  if (conf.tp + conf.fn > 0) m.recall = tp / static_cast<double>(conf.tp + conf.fn);
  if (m.precision + m.recall > 0.0) {
    m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
  }
  return m;
}

Confusion confusion_for(std::span<const VeracityLabel> golds, std::span<const VeracityLabel> preds,
                        VeracityLabel cls) {
  if (golds.size() != preds.size()) {
    throw std::invalid_argument("confusion_for: gold/pred length mismatch");
  }
  Confusion c;
  for (size_t i = 0; i < golds.size(); ++i) {
    const bool gold_is = golds[i] == cls;
    const bool pred_is = preds[i] == cls;
    if (gold_is && pred_is) {
      ++c.tp;
    } else if (!gold_is && pred_is) {
      ++c.fp;
    } else if (gold_is && !pred_is) {
      ++c.fn;
    } else {
      ++c.tn;
    }
  }
  return c;
}

double macro_f1(std::span<const VeracityLabel> golds, std::span<const VeracityLabel> preds) {
  if (golds.empty()) throw std::invalid_argument("macro_f1: empty input");
  if (golds.size() != preds.size()) {
    throw std::invalid_argument("macro_f1: gold/pred length mismatch");
  }
  const ClassMetrics mis = prf(confusion_for(golds, preds, VeracityLabel::Misinformation));
  const ClassMetrics non = prf(confusion_for(golds, preds, VeracityLabel::NonMisinformation));
  return 0.5 * (mis.f1 + non.f1);
}

EvalReport make_report(const std::string& condition, std::span<const VeracityLabel> golds,
                       std::span<const VeracityLabel> preds) {
  EvalReport r;
  r.condition = condition;
  r.mis = prf(confusion_for(golds, preds, VeracityLabel::Misinformation));
  r.non_mis = prf(confusion_for(golds, preds, VeracityLabel::NonMisinformation));
  r.macro_f1 = 0.5 * (r.mis.f1 + r.non_mis.f1);
  r.n = static_cast<int64_t>(golds.size());
  return r;
}

namespace {

ordered_json class_to_json(const ClassMetrics& m) {
  ordered_json j;
  j["precision"] = m.precision;
  j["recall"] = m.recall;
  j["f1"] = m.f1;
  return j;
}

}  // namespace

std::string reports_to_json(std::span<const EvalReport> reports) {
  ordered_json j;
  j["format"] = "crowdshield-report/1";
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json rj;
    rj["condition"] = r.condition;
    rj["n"] = r.n;
    ordered_json classes;
    classes["non-misinformation"] = class_to_json(r.non_mis);
    classes["misinformation"] = class_to_json(r.mis);
    rj["classes"] = classes;
    rj["macro_f1"] = r.macro_f1;
    arr.push_back(rj);
  }
  j["reports"] = arr;
  return j.dump(2) + "\n";
}

void save_reports_json(std::span<const EvalReport> reports, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write report: " + path.string());
  out << reports_to_json(reports);
}

void save_reports_csv(std::span<const EvalReport> reports, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write report: " + path.string());
  out << "condition,class,precision,recall,f1,macro_f1\n";
  char buf[256];
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof(buf), "%s,non-misinformation,%.6f,%.6f,%.6f,%.6f\n",
                  r.condition.c_str(), r.non_mis.precision, r.non_mis.recall, r.non_mis.f1,
                  r.macro_f1);
    out << buf;
    std::snprintf(buf, sizeof(buf), "%s,misinformation,%.6f,%.6f,%.6f,%.6f\n", r.condition.c_str(),
                  r.mis.precision, r.mis.recall, r.mis.f1, r.macro_f1);
    out << buf;
  }
}

}  // namespace crowdshield
