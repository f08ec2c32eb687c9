#include <cmath>

#include "doctest.h"

#include "crowdshield/pipeline.hpp"
#include "crowdshield/synth.hpp"

using namespace crowdshield;

namespace {

// small corpus with stance-borne veracity signal
Dataset small_corpus(uint64_t seed, int n_threads = 60) {
  SynthConfig cfg = default_synth_config();
  cfg.n_threads = n_threads;
  cfg.replies_min = 4;
  cfg.replies_max = 10;
  cfg.misinfo_fraction = 0.4;
  cfg.stance_misinfo.p = {0.1, 0.55, 0.15, 0.2};
  cfg.stance_nonmisinfo.p = {0.55, 0.1, 0.15, 0.2};
  cfg.test_fraction = 0.25;
  cfg.seed = seed;
  return generate_dataset(cfg);
}

PipelineConfig fast_config(uint64_t seed) {
  PipelineConfig cfg;
  cfg.seed = seed;
  cfg.encoder.dim = 32;
  cfg.qtrain.episodes = 150;
  cfg.qtrain.min_buffer_before_update = 32;
  cfg.fusion.L = 16;
  cfg.clf.epochs = 8;
  cfg.clf.patience = 8;
  cfg.dev_fraction = 0.15;
  return cfg;
}

}  // namespace

TEST_CASE("pipeline features have the configured dimension and respect ablations") {
  const Dataset d = small_corpus(1);
  const PipelineConfig cfg = fast_config(11);
  const TrainedPipeline p = train_pipeline(d, cfg);

  const Thread& t = d.threads.front();
  const FusedVector full = pipeline_features(t, p);
  REQUIRE(full.size() == static_cast<size_t>(cfg.fusion.L + cfg.encoder.dim));

  TrainedPipeline no_q = p;
  no_q.ablation = AblationMode::NoQ;
  const FusedVector vq = pipeline_features(t, no_q);
  for (int i = 0; i < cfg.fusion.L; ++i) CHECK(vq[static_cast<size_t>(i)] == 0.0);
  for (size_t i = static_cast<size_t>(cfg.fusion.L); i < full.size(); ++i) {
    CHECK(vq[i] == full[i]);
  }

  TrainedPipeline no_text = p;
  no_text.ablation = AblationMode::NoText;
  const FusedVector vt = pipeline_features(t, no_text);
  for (size_t i = static_cast<size_t>(cfg.fusion.L); i < full.size(); ++i) CHECK(vt[i] == 0.0);
  for (int i = 0; i < cfg.fusion.L; ++i) CHECK(vt[static_cast<size_t>(i)] == full[static_cast<size_t>(i)]);
}

TEST_CASE("tau=all equals evaluation on untruncated threads") {
  const Dataset d = small_corpus(2);
  const TrainedPipeline p = train_pipeline(d, fast_config(5));
  const auto test = d.threads_in(Split::Test);

  const std::vector<Milestone> milestones{{std::nullopt}};
  const auto reports = early_detection_sweep(p, test, milestones);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].condition == "tau=all");

  const EvalReport direct = evaluate_pipeline(p, test, "direct");
  CHECK(reports[0].macro_f1 == direct.macro_f1);
  CHECK(reports[0].mis.f1 == direct.mis.f1);
}

TEST_CASE("tau=0 still produces a well-formed report") {
  const Dataset d = small_corpus(3);
  const TrainedPipeline p = train_pipeline(d, fast_config(6));
  const std::vector<Milestone> milestones{{0}};
  const auto reports = early_detection_sweep(p, d.threads_in(Split::Test), milestones);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].condition == "tau=0");
  CHECK(reports[0].n == static_cast<int64_t>(d.threads_in(Split::Test).size()));
  CHECK(reports[0].macro_f1 >= 0.0);
  CHECK(reports[0].macro_f1 <= 1.0);
}

TEST_CASE("milestone evaluation consumes nothing beyond the prefix") {
  const Dataset d = small_corpus(4);
  const TrainedPipeline p = train_pipeline(d, fast_config(7));
  auto test = d.threads_in(Split::Test);

  const int tau = 3;
  const std::vector<Milestone> milestones{{tau}};
  const auto before = early_detection_sweep(p, test, milestones);

  // scramble everything after the prefix
  for (auto& t : test) {
    for (size_t i = static_cast<size_t>(tau); i < t.n_replies(); ++i) {
      t.replies[i].text = "scrambled garbage tokens";
      t.replies[i].stance = Stance::Deny;
      t.replies[i].claim = ClaimLabel::Claim;
    }
  }
  const auto after = early_detection_sweep(p, test, milestones);
  CHECK(before[0].macro_f1 == after[0].macro_f1);
  CHECK(before[0].mis.precision == after[0].mis.precision);
  CHECK(before[0].non_mis.recall == after[0].non_mis.recall);
}

TEST_CASE("ablation_run tags reports by mode") {
  const Dataset d = small_corpus(5);
  const PipelineConfig cfg = fast_config(8);
  const EvalReport full = ablation_run(d, AblationMode::Full, cfg);
  const EvalReport no_q = ablation_run(d, AblationMode::NoQ, cfg);
  CHECK(full.condition == "full");
  CHECK(no_q.condition == "no_q");
  CHECK(full.n == no_q.n);
}

TEST_CASE("alpha_sweep is deterministic and tags by alpha") {
  const Dataset d = small_corpus(6, 40);
  const PipelineConfig cfg = fast_config(9);
  const std::vector<double> alphas{2.0};
  const auto once = alpha_sweep(d, alphas, cfg);
  const auto twice = alpha_sweep(d, alphas, cfg);
  REQUIRE(once.size() == 1);
  CHECK(once[0].condition == "alpha=2");
  CHECK(once[0].macro_f1 == twice[0].macro_f1);
  CHECK(once[0].mis.f1 == twice[0].mis.f1);
}

TEST_CASE("train_pipeline is deterministic end to end") {
  const Dataset d = small_corpus(7, 40);
  const PipelineConfig cfg = fast_config(10);
  const TrainedPipeline a = train_pipeline(d, cfg);
  const TrainedPipeline b = train_pipeline(d, cfg);
  CHECK(a.qnet.weights == b.qnet.weights);
  CHECK(a.clf.weights == b.clf.weights);
  REQUIRE(a.clf_history.rows.size() == b.clf_history.rows.size());
  for (size_t i = 0; i < a.clf_history.rows.size(); ++i) {
    CHECK(a.clf_history.rows[i].dev_macro_f1 == b.clf_history.rows[i].dev_macro_f1);
  }
}

TEST_CASE("no_q stays close to full when the labels live in the text") {
  // identical stance distributions kill the Q-channel signal; a marker
  // token injected into misinformation sources puts it all in the text
  SynthConfig scfg = default_synth_config();
  scfg.n_threads = 240;
  scfg.replies_min = 3;
  scfg.replies_max = 6;
  scfg.misinfo_fraction = 0.0;
  scfg.stance_misinfo = scfg.stance_nonmisinfo;
  scfg.test_fraction = 0.25;
  scfg.seed = 91;
  Dataset d = generate_dataset(scfg);
  for (size_t i = 0; i < d.threads.size(); ++i) {
    auto& t = d.threads[i];
    const bool mis = i % 4 == 0;
    if (mis) t.veracity = VeracityLabel::Misinformation;
    const char* marker = mis ? " falseflag" : " trueflag";
    for (int k = 0; k < 6; ++k) t.source.text += marker;
  }

  PipelineConfig cfg = fast_config(13);
  cfg.clf.epochs = 60;
  cfg.clf.patience = 20;
  cfg.clf.lr = 0.01;
  const EvalReport full = ablation_run(d, AblationMode::Full, cfg);
  const EvalReport no_q = ablation_run(d, AblationMode::NoQ, cfg);
  CHECK(std::abs(full.macro_f1 - no_q.macro_f1) <= 0.05);
  CHECK(full.macro_f1 > 0.85);  // the marker is learnable
}

TEST_CASE("no_text equals full under a zero-information encoder") {
  // punctuation-only token pools plus comment-only replies (filtered out
  // of the combined text) encode every thread to the zero vector, so
  // zeroing the embedding block changes nothing
  SynthConfig scfg = default_synth_config();
  scfg.n_threads = 40;
  scfg.replies_min = 3;
  scfg.replies_max = 8;
  scfg.pool_root = {"...", "!!!"};
  for (auto& pool : scfg.pools) pool = {"...", "???", "!!"};
  scfg.stance_misinfo.p = {0.0, 0.0, 0.0, 1.0};
  scfg.stance_nonmisinfo.p = {0.0, 0.0, 0.0, 1.0};
  scfg.test_fraction = 0.25;
  scfg.seed = 17;
  const Dataset d = generate_dataset(scfg);

  const PipelineConfig cfg = fast_config(14);
  const EvalReport full = ablation_run(d, AblationMode::Full, cfg);
  const EvalReport no_text = ablation_run(d, AblationMode::NoText, cfg);
  CHECK(full.macro_f1 == no_text.macro_f1);
  CHECK(full.mis.f1 == no_text.mis.f1);
  CHECK(full.non_mis.precision == no_text.non_mis.precision);
}

TEST_CASE("retrained milestone sweep trains on truncated threads") {
  const Dataset d = small_corpus(10, 40);
  PipelineConfig cfg = fast_config(16);
  const std::vector<Milestone> milestones{{2}, {std::nullopt}};

  const auto once = early_detection_sweep_retrained(d, cfg, milestones);
  REQUIRE(once.size() == 2);
  CHECK(once[0].condition == "tau=2");
  CHECK(once[1].condition == "tau=all");

  // deterministic, and parallel execution changes nothing
  const auto again = early_detection_sweep_retrained(d, cfg, milestones, 2);
  for (size_t i = 0; i < once.size(); ++i) {
    CHECK(once[i].macro_f1 == again[i].macro_f1);
  }

  // the tau=all milestone equals a plain train/evaluate cycle
  const TrainedPipeline p = train_pipeline(d, cfg);
  const EvalReport direct = evaluate_pipeline(p, d.threads_in(Split::Test), "tau=all");
  CHECK(once[1].macro_f1 == direct.macro_f1);
}

TEST_CASE("parallel conditions produce the same reports as sequential") {
  const Dataset d = small_corpus(9, 40);
  const PipelineConfig cfg = fast_config(15);
  const std::vector<double> alphas{1.0, 2.0, 3.0};
  const auto seq = alpha_sweep(d, alphas, cfg, 1);
  const auto par = alpha_sweep(d, alphas, cfg, 3);
  REQUIRE(seq.size() == par.size());
  for (size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].condition == par[i].condition);
    CHECK(seq[i].macro_f1 == par[i].macro_f1);
    CHECK(seq[i].mis.f1 == par[i].mis.f1);
  }

  const auto ab_seq = ablation_suite(d, cfg, 1);
  const auto ab_par = ablation_suite(d, cfg, 3);
  REQUIRE(ab_seq.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(ab_seq[i].condition == ab_par[i].condition);
    CHECK(ab_seq[i].macro_f1 == ab_par[i].macro_f1);
  }
}

TEST_CASE("literal weighting changes only non-claim positions") {
  const Dataset d = small_corpus(8, 30);
  PipelineConfig cfg = fast_config(12);
  const TrainedPipeline p = train_pipeline(d, cfg);

  TrainedPipeline literal = p;
  literal.fusion.literal_weighting = true;

  const Thread& t = d.threads.front();
  const FusedVector a = pipeline_features(t, p);
  const FusedVector b = pipeline_features(t, literal);
  const std::vector<int> c = claim_vector(t, cfg.fusion.L);
  for (int i = 0; i < cfg.fusion.L; ++i) {
    if (c[static_cast<size_t>(i)] == 1) {
      CHECK(a[static_cast<size_t>(i)] == b[static_cast<size_t>(i)]);
    } else {
      CHECK(b[static_cast<size_t>(i)] == 0.0);
    }
  }
}
