#include "crowdshield/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "crowdshield/rng.hpp"

namespace crowdshield {

SynthConfig default_synth_config() {
  SynthConfig cfg;
  cfg.pool_root = {"report",  "breaking", "officials", "city",   "today",  "announce",
                   "hospital", "storm",    "election",  "market", "police", "update"};
  cfg.pools[0] = {"agree", "true",  "confirmed", "exactly", "right",   "source",
                  "checks", "valid", "indeed",    "correct", "verified"};
  cfg.pools[1] = {"false", "wrong", "fake",   "debunked", "nonsense", "hoax",
                  "lie",   "never", "actually", "misleading"};
  cfg.pools[2] = {"really", "how", "when", "source", "where", "proof", "sure", "link", "why"};
  cfg.pools[3] = {"wow",  "interesting", "thanks", "hmm",  "people", "thing",
                  "seen", "everyone",    "maybe",  "crazy", "lol"};
  return cfg;
}

namespace {

void validate_config(const SynthConfig& cfg) {
  auto check_dist = [](const StanceDist& d, const char* name) {
    double sum = 0.0;
    for (double p : d.p) {
      if (p < 0.0) throw std::invalid_argument(std::string("synth: negative probability in ") + name);
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw std::invalid_argument(std::string("synth: ") + name + " must sum to 1");
    }
  };
  check_dist(cfg.stance_misinfo, "stance_misinfo");
  check_dist(cfg.stance_nonmisinfo, "stance_nonmisinfo");
  if (cfg.signal_window > 0) check_dist(cfg.stance_late, "stance_late");
  for (double r : cfg.claim_rate) {
    if (r < 0.0 || r > 1.0) throw std::invalid_argument("synth: claim_rate out of [0,1]");
  }
  if (cfg.misinfo_fraction < 0.0 || cfg.misinfo_fraction > 1.0) {
    throw std::invalid_argument("synth: misinfo_fraction out of [0,1]");
  }
  if (cfg.test_fraction < 0.0 || cfg.test_fraction > 1.0) {
    throw std::invalid_argument("synth: test_fraction out of [0,1]");
  }
  if (cfg.n_threads < 0) throw std::invalid_argument("synth: n_threads must be >= 0");
  if (cfg.replies_min < 0 || cfg.replies_max < cfg.replies_min) {
    throw std::invalid_argument("synth: invalid replies range");
  }
  if (cfg.tokens_min < 1 || cfg.tokens_max < cfg.tokens_min) {
    throw std::invalid_argument("synth: invalid tokens range");
  }
  if (cfg.pool_root.empty()) throw std::invalid_argument("synth: empty root token pool");
  for (const auto& pool : cfg.pools) {
    if (pool.empty()) throw std::invalid_argument("synth: empty stance token pool");
  }
}

int sample_categorical(const std::array<double, 4>& p, Rng& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) {
    acc += p[static_cast<size_t>(i)];
    if (u < acc) return i;
  }
  return 3;
}

std::string sample_text(const std::vector<std::string>& pool, const SynthConfig& cfg, Rng& rng) {
  const int n = cfg.tokens_min +
                static_cast<int>(rng.uniform_index(
                    static_cast<size_t>(cfg.tokens_max - cfg.tokens_min + 1)));
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += pool[rng.uniform_index(pool.size())];
  }
  return out;
}

}  // namespace

Dataset generate_dataset(const SynthConfig& cfg) {
  validate_config(cfg);
  Dataset d;
  Rng rng(cfg.seed);
  char idbuf[64];

  for (int ti = 0; ti < cfg.n_threads; ++ti) {
    Thread t;
    std::snprintf(idbuf, sizeof(idbuf), "t%05d", ti);
    t.thread_id = idbuf;
    t.veracity = rng.bernoulli(cfg.misinfo_fraction) ? VeracityLabel::Misinformation
                                                     : VeracityLabel::NonMisinformation;

    t.source.id = t.thread_id + "-src";
    t.source.parent_id.clear();
    t.source.text = sample_text(cfg.pool_root, cfg, rng);
    t.source.time = 0;
    t.source.stance = Stance::Root;
    t.source.claim = ClaimLabel::Claim;

    const int n_replies =
        cfg.replies_min + static_cast<int>(rng.uniform_index(
                              static_cast<size_t>(cfg.replies_max - cfg.replies_min + 1)));
    const StanceDist& base = t.veracity == VeracityLabel::Misinformation ? cfg.stance_misinfo
                                                                         : cfg.stance_nonmisinfo;
    int64_t clock = 0;
    for (int ri = 0; ri < n_replies; ++ri) {
      Reply r;
      std::snprintf(idbuf, sizeof(idbuf), "%s-r%04d", t.thread_id.c_str(), ri);
      r.id = idbuf;

      const bool late = cfg.signal_window > 0 && ri >= cfg.signal_window;
      const int stance_idx = sample_categorical(late ? cfg.stance_late.p : base.p, rng);
      r.stance = static_cast<Stance>(stance_idx);
      r.claim = rng.bernoulli(cfg.claim_rate[static_cast<size_t>(stance_idx)])
                    ? ClaimLabel::Claim
                    : ClaimLabel::NonClaim;
      r.text = sample_text(cfg.pools[static_cast<size_t>(stance_idx)], cfg, rng);

      clock += std::max<int64_t>(1, std::llround(rng.exponential(cfg.gap_mean_seconds)));
      r.time = clock;

      if (ri == 0) {
        r.parent_id = t.source.id;
      } else if (rng.bernoulli(cfg.branching_prob)) {
        const size_t pick = rng.uniform_index(static_cast<size_t>(ri) + 1);
        r.parent_id = pick == 0 ? t.source.id : t.replies[pick - 1].id;
      } else {
        r.parent_id = t.replies.back().id;
      }
      t.replies.push_back(std::move(r));
    }

    d.split[t.thread_id] = rng.bernoulli(cfg.test_fraction) ? Split::Test : Split::Train;
    d.threads.push_back(std::move(t));
  }
  return d;
}

}  // namespace crowdshield
