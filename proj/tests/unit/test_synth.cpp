#include <cmath>

#include "doctest.h"

#include "crowdshield/io.hpp"
#include "crowdshield/synth.hpp"
#include "crowdshield/thread.hpp"

using namespace crowdshield;

TEST_CASE("zero threads yields an empty dataset") {
  SynthConfig cfg = default_synth_config();
  cfg.n_threads = 0;
  const Dataset d = generate_dataset(cfg);
  CHECK(d.threads.empty());
  CHECK(d.split.empty());
}

TEST_CASE("misinfo_fraction one labels every thread misinformation") {
  SynthConfig cfg = default_synth_config();
  cfg.n_threads = 30;
  cfg.misinfo_fraction = 1.0;
  cfg.seed = 4;
  const Dataset d = generate_dataset(cfg);
  REQUIRE(d.threads.size() == 30);
  for (const auto& t : d.threads) CHECK(t.veracity == VeracityLabel::Misinformation);
}

TEST_CASE("every generated thread passes validation") {
  SynthConfig cfg = default_synth_config();
  cfg.n_threads = 40;
  cfg.branching_prob = 0.6;
  cfg.seed = 10;
  const Dataset d = generate_dataset(cfg);
  for (const auto& t : d.threads) {
    CHECK(validate_thread(t).valid());
    // timestamps strictly increase
    int64_t prev = t.source.time;
    for (const auto& r : t.replies) {
      CHECK(r.time > prev);
      prev = r.time;
    }
  }
  // every thread id is in exactly one split
  CHECK(d.split.size() == d.threads.size());
}

TEST_CASE("generation is byte-identical for the same seed") {
  SynthConfig cfg = default_synth_config();
  cfg.n_threads = 25;
  cfg.seed = 99;
  const std::string a = dataset_to_jsonl(generate_dataset(cfg));
  const std::string b = dataset_to_jsonl(generate_dataset(cfg));
  CHECK(a == b);

  cfg.seed = 100;
  CHECK(dataset_to_jsonl(generate_dataset(cfg)) != a);
}

TEST_CASE("empirical deny rate tracks the configured rate") {
  SynthConfig cfg = default_synth_config();
  cfg.n_threads = 700;
  cfg.replies_min = 12;
  cfg.replies_max = 20;
  cfg.misinfo_fraction = 1.0;
  cfg.stance_misinfo.p = {0.3, 0.4, 0.1, 0.2};
  cfg.seed = 8;
  const Dataset d = generate_dataset(cfg);

  int64_t denies = 0, total = 0;
  for (const auto& t : d.threads) {
    for (const auto& r : t.replies) {
      total += 1;
      if (r.stance == Stance::Deny) denies += 1;
    }
  }
  REQUIRE(total >= 10000);
  const double rate = static_cast<double>(denies) / static_cast<double>(total);
  CHECK(std::abs(rate - 0.4) <= 0.02);
}

TEST_CASE("stance frequencies converge to the configured distribution") {
  SynthConfig cfg = default_synth_config();
  cfg.n_threads = 1200;
  cfg.replies_min = 10;
  cfg.replies_max = 24;
  cfg.misinfo_fraction = 0.0;
  cfg.stance_nonmisinfo.p = {0.5, 0.05, 0.15, 0.3};
  cfg.seed = 12;
  const Dataset d = generate_dataset(cfg);

  std::array<int64_t, 4> counts{};
  int64_t total = 0;
  for (const auto& t : d.threads) {
    for (const auto& r : t.replies) {
      counts[static_cast<size_t>(r.stance)] += 1;
      total += 1;
    }
  }
  for (int i = 0; i < 4; ++i) {
    const double rate = static_cast<double>(counts[static_cast<size_t>(i)]) /
                        static_cast<double>(total);
    CHECK(std::abs(rate - cfg.stance_nonmisinfo.p[static_cast<size_t>(i)]) <= 0.02);
  }
}

TEST_CASE("the late-window distribution takes over beyond the signal window") {
  SynthConfig cfg = default_synth_config();
  cfg.n_threads = 120;
  cfg.replies_min = 12;
  cfg.replies_max = 16;
  cfg.signal_window = 5;
  cfg.stance_late.p = {0.0, 0.0, 0.0, 1.0};
  cfg.seed = 3;
  const Dataset d = generate_dataset(cfg);
  for (const auto& t : d.threads) {
    for (size_t i = static_cast<size_t>(cfg.signal_window); i < t.n_replies(); ++i) {
      CHECK(t.replies[i].stance == Stance::Comment);
    }
  }
}

TEST_CASE("invalid configurations are rejected") {
  SynthConfig cfg = default_synth_config();
  cfg.stance_misinfo.p = {0.5, 0.5, 0.5, 0.5};
  CHECK_THROWS_AS(generate_dataset(cfg), std::invalid_argument);

  SynthConfig neg = default_synth_config();
  neg.misinfo_fraction = -0.1;
  CHECK_THROWS_AS(generate_dataset(neg), std::invalid_argument);

  SynthConfig pool = default_synth_config();
  pool.pools[2].clear();
  CHECK_THROWS_AS(generate_dataset(pool), std::invalid_argument);
}
