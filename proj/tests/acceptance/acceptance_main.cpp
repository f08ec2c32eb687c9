// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every tolerance is pinned in code; runs entirely offline and uses the
// CLI binary (CROWDSHIELD_CLI_PATH) for the determinism criterion.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "crowdshield/analysis.hpp"
#include "crowdshield/classifier.hpp"
#include "crowdshield/config.hpp"
#include "crowdshield/io.hpp"
#include "crowdshield/metrics.hpp"
#include "crowdshield/pipeline.hpp"
#include "crowdshield/qlearning.hpp"
#include "crowdshield/synth.hpp"

namespace fs = std::filesystem;
using namespace crowdshield;

namespace {

int g_failures = 0;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void run_criterion(int number, const std::string& name, double time_limit_s,
                   const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.ok = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= time_limit_s) {
    outcome.ok = false;
    outcome.detail += (outcome.detail.empty() ? "" : "; ") + std::string("runtime ") +
                      std::to_string(elapsed) + "s exceeds limit";
  }
  std::printf("[%s] %2d %-28s (%.2fs)%s%s\n", outcome.ok ? "PASS" : "FAIL", number, name.c_str(),
              elapsed, outcome.detail.empty() ? "" : " ", outcome.detail.c_str());
  std::fflush(stdout);
  if (!outcome.ok) ++g_failures;
}

void skip_criterion(int number, const std::string& name, const std::string& reason) {
  std::printf("[SKIP] %2d %-28s %s\n", number, name.c_str(), reason.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

Reply reply_with(std::string id, std::string parent, int64_t time, Stance stance,
                 ClaimLabel claim, std::string text) {
  Reply r;
  r.id = std::move(id);
  r.parent_id = std::move(parent);
  r.time = time;
  r.stance = stance;
  r.claim = claim;
  r.text = std::move(text);
  return r;
}

// Threads whose node texts are unique tokens, so states stay
// near-orthogonal under the hashing encoder.
std::vector<Thread> random_unique_token_threads(int n_threads, int max_replies, Rng& gen,
                                                bool all_support) {
  std::vector<Thread> threads;
  for (int i = 0; i < n_threads; ++i) {
    Thread t;
    t.thread_id = "vi" + std::to_string(i);
    t.source.id = t.thread_id + "-src";
    t.source.time = 0;
    t.source.stance = Stance::Root;
    t.source.claim = gen.bernoulli(0.5) ? ClaimLabel::Claim : ClaimLabel::NonClaim;
    const std::string stem = std::to_string(i);
    t.source.text = "aas" + stem + " bbs" + stem + " ccs" + stem;
    t.veracity = VeracityLabel::NonMisinformation;

    const int n = static_cast<int>(gen.uniform_index(static_cast<size_t>(max_replies))) + 1;
    for (int j = 0; j < n; ++j) {
      const std::string node = stem + "x" + std::to_string(j);
      const Stance stance =
          all_support ? Stance::Support : static_cast<Stance>(gen.uniform_index(4));
      t.replies.push_back(reply_with(
          t.thread_id + "-r" + std::to_string(j), j == 0 ? t.source.id : t.replies.back().id,
          20 * (j + 1), stance,
          gen.bernoulli(0.5) ? ClaimLabel::Claim : ClaimLabel::NonClaim,
          "aa" + node + " bb" + node + " cc" + node));
    }
    threads.push_back(std::move(t));
  }
  return threads;
}

// Shared support/deny token pools starve the text channel so the label
// signal must travel through the Q features.
SynthConfig stance_signal_corpus_config() {
  SynthConfig cfg;
  cfg.n_threads = 400;
  cfg.replies_min = 10;
  cfg.replies_max = 24;
  cfg.misinfo_fraction = 0.25;
  cfg.stance_misinfo.p = {0.10, 0.55, 0.15, 0.20};
  cfg.stance_nonmisinfo.p = {0.55, 0.10, 0.15, 0.20};
  cfg.claim_rate = {0.5, 0.5, 0.3, 0.3};
  cfg.pool_root = {"report",   "breaking", "officials", "city",     "today",
                   "announce", "hospital", "storm",     "election", "market"};
  const std::vector<std::string> reaction = {"folks",  "really", "update", "thread", "reading",
                                             "posted", "share",  "seen",   "online", "media"};
  cfg.pools[0] = reaction;
  cfg.pools[1] = reaction;
  cfg.pools[2] = {"where", "source", "link", "when", "how", "proof", "sure", "why"};
  cfg.pools[3] = {"wow", "interesting", "thanks", "hmm", "people", "thing", "maybe", "crazy"};
  cfg.test_fraction = 0.2;
  cfg.seed = 11;
  return cfg;
}

PipelineConfig stance_signal_pipeline_config() {
  PipelineConfig cfg;
  cfg.seed = 11;
  cfg.encoder.dim = 128;
  cfg.qtrain.episodes = 1500;
  cfg.qtrain.lr = 0.01;
  cfg.clf.epochs = 60;
  cfg.clf.patience = 20;
  cfg.clf.lr = 0.01;
  cfg.clf.batch = 8;
  return cfg;
}

Outcome criterion_reward_exhaustion() {
  Outcome out;
  const double expected[2][kNumActions] = {
      // support, deny, query, comment, root
      {1.0, -1.0, 1.0, 0.0, 1.0},  // non-claim
      {2.0, 0.0, 2.0, 1.0, 2.0},   // claim
  };
  std::set<double> image;
  for (int c = 0; c < 2; ++c) {
    for (int a = 0; a < kNumActions; ++a) {
      const double r =
          reward(c ? ClaimLabel::Claim : ClaimLabel::NonClaim, static_cast<Stance>(a));
      image.insert(r);
      if (r != expected[c][a]) {
        out.ok = false;
        out.detail = "reward(claim=" + std::to_string(c) + ", action=" + std::to_string(a) +
                     ") = " + fmt(r);
        return out;
      }
    }
  }
  if (image != std::set<double>{-1.0, 0.0, 1.0, 2.0}) {
    out.ok = false;
    out.detail = "reward image is not {-1, 0, 1, 2}";
  }
  return out;
}

double grad_rel_error(const std::vector<double>& analytic, const std::vector<double>& numeric) {
  double diff = 0.0, scale = 0.0;
  for (size_t i = 0; i < analytic.size(); ++i) {
    diff += (analytic[i] - numeric[i]) * (analytic[i] - numeric[i]);
    scale += analytic[i] * analytic[i] + numeric[i] * numeric[i];
  }
  return std::sqrt(diff) / std::max(std::sqrt(scale), 1e-12);
}

Outcome criterion_gradient_checks() {
  Outcome out;
  const double h = 1e-5;
  const double tol = 1e-4;
  Rng rng(202);

  // Q-network MSE gradient
  for (int instance = 0; instance < 20; ++instance) {
    const int d_s = 6;
    QNetwork q = QNetwork::zeros(d_s);
    for (double& w : q.weights) w = rng.normal() * 0.5;
    for (double& b : q.bias) b = rng.normal() * 0.5;

    std::vector<Transition> batch;
    std::vector<double> targets;
    const size_t B = 1 + rng.uniform_index(4);
    for (size_t i = 0; i < B; ++i) {
      Transition tr;
      for (int f = 0; f < d_s; ++f) tr.s.push_back(rng.normal());
      tr.action = static_cast<int>(rng.uniform_index(kNumActions));
      batch.push_back(std::move(tr));
      targets.push_back(rng.normal());
    }
    const QGradients g = qnet_mse_gradient(q, batch, targets);
    std::vector<double> analytic = g.weights;
    analytic.insert(analytic.end(), g.bias.begin(), g.bias.end());
    std::vector<double> numeric;
    const size_t n_params = q.weights.size() + kNumActions;
    for (size_t idx = 0; idx < n_params; ++idx) {
      auto loss_at = [&](double delta) {
        QNetwork qq = q;
        if (idx < qq.weights.size()) {
          qq.weights[idx] += delta;
        } else {
          qq.bias[idx - qq.weights.size()] += delta;
        }
        return qnet_mse_loss(qq, batch, targets);
      };
      numeric.push_back((loss_at(h) - loss_at(-h)) / (2.0 * h));
    }
    const double err = grad_rel_error(analytic, numeric);
    if (err > tol) {
      out.ok = false;
      out.detail = "qnet instance " + std::to_string(instance) + " rel err " + fmt(err);
      return out;
    }
  }

  // classifier cross-entropy gradient
  for (int instance = 0; instance < 20; ++instance) {
    const int dim = 5;
    LinearClassifier m = LinearClassifier::init(dim, rng.next_u64());
    for (double& w : m.weights) w = rng.normal() * 0.7;
    m.bias = {rng.normal() * 0.3, rng.normal() * 0.3};

    std::vector<std::vector<double>> X;
    std::vector<VeracityLabel> y;
    const size_t B = 1 + rng.uniform_index(4);
    for (size_t i = 0; i < B; ++i) {
      std::vector<double> v(dim);
      for (double& x : v) x = rng.normal();
      X.push_back(std::move(v));
      y.push_back(rng.bernoulli(0.5) ? VeracityLabel::Misinformation
                                     : VeracityLabel::NonMisinformation);
    }
    const ClfGradients g = clf_ce_gradient(m, X, y);
    std::vector<double> analytic = g.weights;
    analytic.insert(analytic.end(), g.bias.begin(), g.bias.end());
    std::vector<double> numeric;
    const size_t n_params = m.weights.size() + 2;
    for (size_t idx = 0; idx < n_params; ++idx) {
      auto loss_at = [&](double delta) {
        LinearClassifier mm = m;
        if (idx < mm.weights.size()) {
          mm.weights[idx] += delta;
        } else {
          mm.bias[idx - mm.weights.size()] += delta;
        }
        return clf_ce_loss(mm, X, y);
      };
      numeric.push_back((loss_at(h) - loss_at(-h)) / (2.0 * h));
    }
    const double err = grad_rel_error(analytic, numeric);
    if (err > tol) {
      out.ok = false;
      out.detail = "classifier instance " + std::to_string(instance) + " rel err " + fmt(err);
      return out;
    }
  }
  return out;
}

Outcome criterion_value_iteration_oracle() {
  Outcome out;
  // All-support gold stances make the greedy zero-exploration traversal
  // coincide with the gold actions, and keep exact backward induction the
  // fixpoint of the learned system.
  Rng gen(303);
  const std::vector<Thread> threads = random_unique_token_threads(10, 4, gen, true);

  const HashingEncoder enc(128, 5);
  QTrainConfig cfg;
  cfg.episodes = 2000;
  cfg.discount = 0.2;
  cfg.explore_rate = 0.0;
  cfg.lr = 0.01;
  cfg.seed = 9;

  const auto [q, log] = train_q(threads, enc, cfg);

  double worst = 0.0;
  for (const auto& t : threads) {
    const size_t n = t.n_replies();
    // exact value iteration over the chain; support maximizes the stance
    // term, so these are the optimal values at the visited pairs
    std::vector<double> value(n + 1);
    value[n] = reward(t.node(n).claim, Stance::Support);
    for (size_t j = n; j-- > 0;) {
      value[j] = reward(t.node(j).claim, Stance::Support) + cfg.discount * value[j + 1];
    }
    for (size_t j = 0; j <= n; ++j) {
      const double learned =
          q.q_values(state_features(t, j, enc))[static_cast<size_t>(Stance::Support)];
      worst = std::max(worst, std::abs(learned - value[j]));
    }
  }
  out.detail = "max |learned - VI| = " + fmt(worst);
  out.ok = worst <= 0.05;
  return out;
}

Outcome criterion_gamma_zero() {
  Outcome out;
  Rng gen(404);
  const std::vector<Thread> threads = random_unique_token_threads(15, 5, gen, false);

  const HashingEncoder enc(128, 6);
  QTrainConfig cfg;
  cfg.episodes = 2000;
  cfg.discount = 0.0;
  cfg.explore_rate = 0.0;
  cfg.lr = 0.01;
  cfg.seed = 10;

  // gold actions visit every annotated stance; with discount zero the
  // oracle is the immediate reward
  const auto [q, log] = train_q(threads, enc, cfg, EpisodePolicy::GoldActions);

  double worst = 0.0;
  for (const auto& t : threads) {
    for (size_t j = 0; j <= t.n_replies(); ++j) {
      const Reply& node = t.node(j);
      const double learned =
          q.q_values(state_features(t, j, enc))[static_cast<size_t>(node.stance)];
      worst = std::max(worst, std::abs(learned - reward(node.claim, node.stance)));
    }
  }
  out.detail = "max |learned - reward| = " + fmt(worst);
  out.ok = worst <= 0.05;
  return out;
}

Outcome criterion_fusion_identity() {
  Outcome out;
  SynthConfig scfg = default_synth_config();
  scfg.n_threads = 100;
  scfg.replies_min = 1;
  scfg.replies_max = 30;
  scfg.seed = 505;
  const Dataset d = generate_dataset(scfg);

  const HashingEncoder enc(32, 7);
  const int L = 24;
  Rng rng(506);
  for (const auto& t : d.threads) {
    std::vector<double> q_list(t.n_replies() + 1);
    for (double& v : q_list) v = rng.normal();
    const auto F = q_feature_vector(q_list, L);
    const auto c = claim_vector(t, L);
    const Embedding S = encode_combined(t, enc);

    const FusedVector alpha1 = fuse(F, c, 1.0, S);
    if (alpha1.size() != static_cast<size_t>(L) + S.values.size()) {
      out.ok = false;
      out.detail = "alpha=1 output has wrong dimension";
      return out;
    }
    for (int i = 0; i < L; ++i) {
      if (alpha1[static_cast<size_t>(i)] != F[static_cast<size_t>(i)]) {
        out.ok = false;
        out.detail = "alpha=1 is not plain concatenation at entry " + std::to_string(i);
        return out;
      }
    }
    for (size_t i = 0; i < S.values.size(); ++i) {
      if (alpha1[static_cast<size_t>(L) + i] != S.values[i]) {
        out.ok = false;
        out.detail = "alpha=1 does not append the embedding unchanged";
        return out;
      }
    }

    const FusedVector alpha2 = fuse(F, c, 2.0, S);
    for (int i = 0; i < L; ++i) {
      const double want = c[static_cast<size_t>(i)] ? 2.0 * F[static_cast<size_t>(i)]
                                                    : F[static_cast<size_t>(i)];
      if (alpha2[static_cast<size_t>(i)] != want) {
        out.ok = false;
        out.detail = "alpha=2 does not double exactly the claim-indexed entries";
        return out;
      }
    }
  }
  return out;
}

Outcome criterion_classifier_separability() {
  Outcome out;
  // two Gaussian blobs, centers six sigma apart on the first four coords
  auto make_blobs = [](int n, uint64_t seed, std::vector<std::vector<double>>& X,
                       std::vector<VeracityLabel>& y) {
    Rng rng(seed);
    const int dim = 16;
    for (int i = 0; i < n; ++i) {
      const bool mis = rng.bernoulli(0.5);
      std::vector<double> v(static_cast<size_t>(dim));
      for (int f = 0; f < dim; ++f) {
        const double center = f < 4 ? (mis ? 1.2 : -1.2) : 0.0;
        v[static_cast<size_t>(f)] = center + 0.4 * rng.normal();
      }
      X.push_back(std::move(v));
      y.push_back(mis ? VeracityLabel::Misinformation : VeracityLabel::NonMisinformation);
    }
  };

  std::vector<std::vector<double>> X, X_dev;
  std::vector<VeracityLabel> y, y_dev;
  make_blobs(500, 606, X, y);
  make_blobs(100, 607, X_dev, y_dev);

  ClfTrainConfig cfg;  // epochs 20, patience 3, lr 0.001, batch 8
  cfg.seed = 608;
  const auto [model, history] = train_classifier(X, y, X_dev, y_dev, cfg);
  if (history.rows.size() > 20) {
    out.ok = false;
    out.detail = "trained for more than 20 epochs";
    return out;
  }
  std::vector<VeracityLabel> preds;
  for (const auto& v : X_dev) preds.push_back(model.predict(v).first);
  const double f1 = macro_f1(y_dev, preds);
  out.detail = "dev macro-F1 = " + fmt(f1);
  out.ok = f1 >= 0.95;
  return out;
}

Outcome criterion_end_to_end() {
  Outcome out;
  const Dataset d = generate_dataset(stance_signal_corpus_config());
  const PipelineConfig cfg = stance_signal_pipeline_config();

  const EvalReport full = ablation_run(d, AblationMode::Full, cfg);
  const EvalReport no_q = ablation_run(d, AblationMode::NoQ, cfg);
  out.detail = "full = " + fmt(full.macro_f1) + ", no_q = " + fmt(no_q.macro_f1);
  out.ok = full.macro_f1 >= 0.85 && no_q.macro_f1 <= full.macro_f1 - 0.10;
  return out;
}

Outcome criterion_early_detection() {
  Outcome out;
  SynthConfig scfg = stance_signal_corpus_config();
  scfg.replies_min = 12;
  scfg.replies_max = 24;
  scfg.signal_window = 5;
  scfg.stance_late.p = {0.0, 0.0, 0.0, 1.0};
  const Dataset d = generate_dataset(scfg);

  const TrainedPipeline p = train_pipeline(d, stance_signal_pipeline_config());
  const std::vector<Milestone> milestones{{0}, {10}, {std::nullopt}};
  const auto reports = early_detection_sweep(p, d.threads_in(Split::Test), milestones);

  const double f1_0 = reports[0].macro_f1;
  const double f1_10 = reports[1].macro_f1;
  const double f1_all = reports[2].macro_f1;
  out.detail = "tau=0 " + fmt(f1_0) + ", tau=10 " + fmt(f1_10) + ", tau=all " + fmt(f1_all);
  out.ok = std::abs(f1_10 - f1_all) <= 0.05 && f1_0 < f1_10;
  return out;
}

Outcome criterion_metrics_oracle() {
  Outcome out;
  constexpr VeracityLabel M = VeracityLabel::Misinformation;
  constexpr VeracityLabel N = VeracityLabel::NonMisinformation;
  const double tol = 1e-9;

  struct Case {
    std::vector<VeracityLabel> golds, preds;
    double mis_p, mis_r, mis_f1, non_f1, macro;
  };
  const std::vector<Case> cases = {
      // perfect
      {{M, M, N, N}, {M, M, N, N}, 1.0, 1.0, 1.0, 1.0, 1.0},
      // one missed misinformation
      {{M, M, N, N}, {M, N, N, N}, 1.0, 0.5, 2.0 / 3.0, 0.8, 11.0 / 15.0},
      // everything wrong
      {{M, N}, {N, M}, 0.0, 0.0, 0.0, 0.0, 0.0},
      // no misinformation anywhere: zero-denominator rule
      {{N, N, N}, {N, N, N}, 0.0, 0.0, 0.0, 1.0, 0.5},
      // skewed: one of three mis found, no false alarms
      {{M, M, M, N, N, N, N, N}, {M, N, N, N, N, N, N, N}, 1.0, 1.0 / 3.0, 0.5, 5.0 / 6.0,
       2.0 / 3.0},
  };
  for (size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    const EvalReport r = make_report("case", c.golds, c.preds);
    const bool good = std::abs(r.mis.precision - c.mis_p) <= tol &&
                      std::abs(r.mis.recall - c.mis_r) <= tol &&
                      std::abs(r.mis.f1 - c.mis_f1) <= tol &&
                      std::abs(r.non_mis.f1 - c.non_f1) <= tol &&
                      std::abs(r.macro_f1 - c.macro) <= tol;
    if (!good) {
      out.ok = false;
      out.detail = "confusion case " + std::to_string(i) + " mismatch";
      return out;
    }
  }

  using V = std::vector<std::string>;
  const double k1 = cohens_kappa(V{"x", "y", "x", "y"}, V{"x", "y", "x", "y"});
  const double k0 = cohens_kappa(V{"x", "x", "y", "y"}, V{"x", "y", "x", "y"});
  const double k_half = cohens_kappa(V{"x", "x", "x", "y"}, V{"x", "x", "y", "y"});
  if (std::abs(k1 - 1.0) > tol || std::abs(k0) > tol || std::abs(k_half - 0.5) > tol) {
    out.ok = false;
    out.detail = "kappa cases: " + fmt(k1) + ", " + fmt(k0) + ", " + fmt(k_half);
  }
  return out;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(CROWDSHIELD_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  return std::system(cmd.c_str());
}

Outcome criterion_determinism(const fs::path& work) {
  Outcome out;
  RunConfig cfg;
  cfg.seed = 11;
  cfg.synth = stance_signal_corpus_config();
  cfg.pipeline = stance_signal_pipeline_config();
  const fs::path cfg_path = work / "determinism_config.json";
  save_run_config(cfg, cfg_path);

  if (run_cli("synth --config " + cfg_path.string() + " --out " + (work / "corpus").string()) !=
      0) {
    out.ok = false;
    out.detail = "synth run failed";
    return out;
  }
  const std::string corpus = (work / "corpus" / "corpus.jsonl").string();
  for (const char* dir : {"run1", "run2"}) {
    if (run_cli("pipeline --config " + cfg_path.string() + " --in " + corpus + " --out " +
                (work / dir).string()) != 0) {
      out.ok = false;
      out.detail = std::string("pipeline run failed in ") + dir;
      return out;
    }
  }
  const std::string a = read_file(work / "run1" / "report.json");
  const std::string b = read_file(work / "run2" / "report.json");
  if (a.empty() || a != b) {
    out.ok = false;
    out.detail = "report.json differs between identical runs";
  }
  return out;
}

void criterion_semeval_stats() {
  const char* env = std::getenv("CROWDSHIELD_SEMEVAL_DIR");
  const fs::path root = env ? fs::path(env) : fs::path("data") / "semeval-2019-task7";
  if (!fs::exists(root)) {
    skip_criterion(11, "dataset-stats",
                   "SemEval-2019 Task 7 corpus not present (set CROWDSHIELD_SEMEVAL_DIR); "
                   "reference counts Twitter 214/167, Reddit 26/39 not checkable");
    return;
  }
  run_criterion(11, "dataset-stats", 300.0, [&]() {
    Outcome out;
    LoadOptions opts;
    opts.format = CorpusFormat::RumourEval;
    const Dataset d = load_threads(root, opts);
    const DatasetStats s = dataset_stats(d);
    const int64_t mis = s.train.mis + s.test.mis;
    const int64_t non = s.train.non_mis + s.test.non_mis;
    out.detail = "mis/non = " + std::to_string(mis) + "/" + std::to_string(non);
    // Table totals: Twitter 214/167 plus Reddit 26/39
    out.ok = mis == 214 + 26 && non == 167 + 39;
    return out;
  });
}

}  // namespace

int main() {
  const fs::path work =
      fs::temp_directory_path() / ("crowdshield-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(work);
  fs::create_directories(work);

  std::printf("crowdshield acceptance suite\n");
  run_criterion(1, "reward-exhaustion", 1.0, criterion_reward_exhaustion);
  run_criterion(2, "gradient-checks", 10.0, criterion_gradient_checks);
  run_criterion(3, "value-iteration-oracle", 60.0, criterion_value_iteration_oracle);
  run_criterion(4, "gamma-zero-convergence", 60.0, criterion_gamma_zero);
  run_criterion(5, "fusion-identity", 5.0, criterion_fusion_identity);
  run_criterion(6, "classifier-separability", 30.0, criterion_classifier_separability);
  run_criterion(7, "end-to-end-synthetic", 300.0, criterion_end_to_end);
  run_criterion(8, "early-detection-sanity", 300.0, criterion_early_detection);
  run_criterion(9, "metrics-oracle", 1.0, criterion_metrics_oracle);
  run_criterion(10, "pipeline-determinism", 600.0, [&]() { return criterion_determinism(work); });
  criterion_semeval_stats();

  fs::remove_all(work);
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
