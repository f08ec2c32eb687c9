#include "crowdshield/config.hpp"

#include <fstream>

#include "json.hpp"

#include "crowdshield/error.hpp"
#include "crowdshield/rng.hpp"

namespace crowdshield {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void read_stance_dist(const json& j, StanceDist& out) {
  out.p[0] = j.value("support", out.p[0]);
  out.p[1] = j.value("deny", out.p[1]);
  out.p[2] = j.value("query", out.p[2]);
  out.p[3] = j.value("comment", out.p[3]);
}

ordered_json stance_dist_to_json(const StanceDist& d) {
  ordered_json j;
  j["support"] = d.p[0];
  j["deny"] = d.p[1];
  j["query"] = d.p[2];
  j["comment"] = d.p[3];
  return j;
}

}  // namespace

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open config file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DataError("malformed config " + path.string() + ": " + e.what());
  }
  if (j.value("format", "") != "crowdshield-config/1") {
    throw DataError("config " + path.string() + " missing format crowdshield-config/1");
  }

  RunConfig cfg;
  cfg.seed = j.value("seed", cfg.seed);
  if (j.contains("data")) {
    const json& d = j["data"];
    cfg.data_path = d.value("path", cfg.data_path);
    cfg.data_format = d.value("format", cfg.data_format);
    cfg.claim_sidecar = d.value("claim_sidecar", cfg.claim_sidecar);
  }
  if (j.contains("encoder")) {
    const json& e = j["encoder"];
    const std::string kind = e.value("kind", "hashing");
    if (kind == "hashing") {
      cfg.pipeline.encoder.kind = EncoderKind::Hashing;
    } else if (kind == "external") {
      cfg.pipeline.encoder.kind = EncoderKind::External;
    } else {
      throw DataError("config: unknown encoder kind: " + kind);
    }
    cfg.pipeline.encoder.dim = e.value("dim", cfg.pipeline.encoder.dim);
    cfg.pipeline.encoder.endpoint = e.value("endpoint", cfg.pipeline.encoder.endpoint);
    cfg.pipeline.encoder.batch_size = e.value("batch_size", cfg.pipeline.encoder.batch_size);
    cfg.pipeline.encoder.timeout_ms = e.value("timeout_ms", cfg.pipeline.encoder.timeout_ms);
    cfg.pipeline.encoder.max_in_flight =
        e.value("max_in_flight", cfg.pipeline.encoder.max_in_flight);
  }
  if (j.contains("qtrain")) {
    const json& q = j["qtrain"];
    cfg.pipeline.qtrain.episodes = q.value("episodes", cfg.pipeline.qtrain.episodes);
    cfg.pipeline.qtrain.discount = q.value("discount", cfg.pipeline.qtrain.discount);
    cfg.pipeline.qtrain.explore_rate = q.value("explore_rate", cfg.pipeline.qtrain.explore_rate);
    cfg.pipeline.qtrain.lr = q.value("lr", cfg.pipeline.qtrain.lr);
    cfg.pipeline.qtrain.batch = q.value("batch", cfg.pipeline.qtrain.batch);
    cfg.pipeline.qtrain.buffer_capacity =
        q.value("buffer_capacity", cfg.pipeline.qtrain.buffer_capacity);
    cfg.pipeline.qtrain.min_buffer_before_update =
        q.value("min_buffer_before_update", cfg.pipeline.qtrain.min_buffer_before_update);
  }
  if (j.contains("fusion")) {
    const json& f = j["fusion"];
    cfg.pipeline.fusion.alpha = f.value("alpha", cfg.pipeline.fusion.alpha);
    cfg.pipeline.fusion.L = f.value("L", cfg.pipeline.fusion.L);
    cfg.pipeline.fusion.literal_weighting =
        f.value("literal_eq12", cfg.pipeline.fusion.literal_weighting);
  }
  if (j.contains("classifier")) {
    const json& c = j["classifier"];
    cfg.pipeline.clf.epochs = c.value("epochs", cfg.pipeline.clf.epochs);
    cfg.pipeline.clf.patience = c.value("patience", cfg.pipeline.clf.patience);
    cfg.pipeline.clf.lr = c.value("lr", cfg.pipeline.clf.lr);
    cfg.pipeline.clf.batch = c.value("batch", cfg.pipeline.clf.batch);
    cfg.pipeline.clf.class_weighting =
        c.value("class_weighting", cfg.pipeline.clf.class_weighting);
  }
  cfg.pipeline.dev_fraction = j.value("dev_fraction", cfg.pipeline.dev_fraction);
  cfg.pipeline.seed = cfg.seed;

  if (j.contains("milestones")) {
    cfg.milestones.clear();
    for (const auto& m : j["milestones"]) {
      if (m.is_string()) {
        if (m.get<std::string>() != "all") {
          throw DataError("config: milestone strings must be \"all\"");
        }
        cfg.milestones.push_back({std::nullopt});
      } else {
        cfg.milestones.push_back({m.get<int>()});
      }
    }
  }
  cfg.retrain_per_milestone = j.value("retrain_per_milestone", cfg.retrain_per_milestone);
  if (j.contains("alphas")) cfg.alphas = j["alphas"].get<std::vector<double>>();

  if (j.contains("synth")) {
    const json& s = j["synth"];
    SynthConfig& sc = cfg.synth;
    sc.n_threads = s.value("n_threads", sc.n_threads);
    sc.replies_min = s.value("replies_min", sc.replies_min);
    sc.replies_max = s.value("replies_max", sc.replies_max);
    sc.misinfo_fraction = s.value("misinfo_fraction", sc.misinfo_fraction);
    if (s.contains("stance_misinfo")) read_stance_dist(s["stance_misinfo"], sc.stance_misinfo);
    if (s.contains("stance_nonmisinfo")) {
      read_stance_dist(s["stance_nonmisinfo"], sc.stance_nonmisinfo);
    }
    if (s.contains("claim_rate")) {
      const json& cr = s["claim_rate"];
      sc.claim_rate[0] = cr.value("support", sc.claim_rate[0]);
      sc.claim_rate[1] = cr.value("deny", sc.claim_rate[1]);
      sc.claim_rate[2] = cr.value("query", sc.claim_rate[2]);
      sc.claim_rate[3] = cr.value("comment", sc.claim_rate[3]);
    }
    if (s.contains("token_pools")) {
      const json& tp = s["token_pools"];
      if (tp.contains("root")) sc.pool_root = tp["root"].get<std::vector<std::string>>();
      const char* names[4] = {"support", "deny", "query", "comment"};
      for (int i = 0; i < 4; ++i) {
        if (tp.contains(names[i])) {
          sc.pools[static_cast<size_t>(i)] = tp[names[i]].get<std::vector<std::string>>();
        }
      }
    }
    sc.tokens_min = s.value("tokens_min", sc.tokens_min);
    sc.tokens_max = s.value("tokens_max", sc.tokens_max);
    sc.branching_prob = s.value("branching_prob", sc.branching_prob);
    sc.signal_window = s.value("signal_window", sc.signal_window);
    if (s.contains("stance_late")) read_stance_dist(s["stance_late"], sc.stance_late);
    sc.test_fraction = s.value("test_fraction", sc.test_fraction);
    sc.gap_mean_seconds = s.value("gap_mean_seconds", sc.gap_mean_seconds);
  }
  cfg.synth.seed = derive_seed(cfg.seed, "synth");
  return cfg;
}

void save_run_config(const RunConfig& cfg, const std::filesystem::path& path) {
  ordered_json j;
  j["format"] = "crowdshield-config/1";
  j["seed"] = cfg.seed;
  ordered_json data;
  data["path"] = cfg.data_path;
  data["format"] = cfg.data_format;
  if (!cfg.claim_sidecar.empty()) data["claim_sidecar"] = cfg.claim_sidecar;
  j["data"] = data;

  ordered_json e;
  e["kind"] = cfg.pipeline.encoder.kind == EncoderKind::Hashing ? "hashing" : "external";
  e["dim"] = cfg.pipeline.encoder.dim;
  if (!cfg.pipeline.encoder.endpoint.empty()) e["endpoint"] = cfg.pipeline.encoder.endpoint;
  e["batch_size"] = cfg.pipeline.encoder.batch_size;
  e["timeout_ms"] = cfg.pipeline.encoder.timeout_ms;
  e["max_in_flight"] = cfg.pipeline.encoder.max_in_flight;
  j["encoder"] = e;

  ordered_json q;
  q["episodes"] = cfg.pipeline.qtrain.episodes;
  q["discount"] = cfg.pipeline.qtrain.discount;
  q["explore_rate"] = cfg.pipeline.qtrain.explore_rate;
  q["lr"] = cfg.pipeline.qtrain.lr;
  q["batch"] = cfg.pipeline.qtrain.batch;
  q["buffer_capacity"] = cfg.pipeline.qtrain.buffer_capacity;
  q["min_buffer_before_update"] = cfg.pipeline.qtrain.min_buffer_before_update;
  j["qtrain"] = q;

  ordered_json f;
  f["alpha"] = cfg.pipeline.fusion.alpha;
  f["L"] = cfg.pipeline.fusion.L;
  f["literal_eq12"] = cfg.pipeline.fusion.literal_weighting;
  j["fusion"] = f;

  ordered_json c;
  c["epochs"] = cfg.pipeline.clf.epochs;
  c["patience"] = cfg.pipeline.clf.patience;
  c["lr"] = cfg.pipeline.clf.lr;
  c["batch"] = cfg.pipeline.clf.batch;
  c["class_weighting"] = cfg.pipeline.clf.class_weighting;
  j["classifier"] = c;

  j["dev_fraction"] = cfg.pipeline.dev_fraction;

  ordered_json ms = ordered_json::array();
  for (const auto& m : cfg.milestones) {
    if (m.tau) {
      ms.push_back(*m.tau);
    } else {
      ms.push_back("all");
    }
  }
  j["milestones"] = ms;
  j["retrain_per_milestone"] = cfg.retrain_per_milestone;
  j["alphas"] = cfg.alphas;

  ordered_json s;
  s["n_threads"] = cfg.synth.n_threads;
  s["replies_min"] = cfg.synth.replies_min;
  s["replies_max"] = cfg.synth.replies_max;
  s["misinfo_fraction"] = cfg.synth.misinfo_fraction;
  s["stance_misinfo"] = stance_dist_to_json(cfg.synth.stance_misinfo);
  s["stance_nonmisinfo"] = stance_dist_to_json(cfg.synth.stance_nonmisinfo);
  ordered_json cr;
  cr["support"] = cfg.synth.claim_rate[0];
  cr["deny"] = cfg.synth.claim_rate[1];
  cr["query"] = cfg.synth.claim_rate[2];
  cr["comment"] = cfg.synth.claim_rate[3];
  s["claim_rate"] = cr;
  ordered_json tp;
  tp["root"] = cfg.synth.pool_root;
  tp["support"] = cfg.synth.pools[0];
  tp["deny"] = cfg.synth.pools[1];
  tp["query"] = cfg.synth.pools[2];
  tp["comment"] = cfg.synth.pools[3];
  s["token_pools"] = tp;
  s["tokens_min"] = cfg.synth.tokens_min;
  s["tokens_max"] = cfg.synth.tokens_max;
  s["branching_prob"] = cfg.synth.branching_prob;
  s["signal_window"] = cfg.synth.signal_window;
  s["stance_late"] = stance_dist_to_json(cfg.synth.stance_late);
  s["test_fraction"] = cfg.synth.test_fraction;
  s["gap_mean_seconds"] = cfg.synth.gap_mean_seconds;
  j["synth"] = s;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write config: " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace crowdshield
