#include <vector>

#include "doctest.h"

#include "crowdshield/metrics.hpp"
#include "crowdshield/rng.hpp"

using namespace crowdshield;

namespace {
constexpr VeracityLabel M = VeracityLabel::Misinformation;
constexpr VeracityLabel N = VeracityLabel::NonMisinformation;
}  // namespace

TEST_CASE("prf handles zero denominators by returning zero") {
  CHECK(prf({0, 0, 0, 5}).precision == 0.0);
  CHECK(prf({0, 0, 0, 5}).recall == 0.0);
  CHECK(prf({0, 0, 0, 5}).f1 == 0.0);
  CHECK(prf({0, 0, 3, 2}).recall == 0.0);
  CHECK(prf({0, 2, 0, 3}).precision == 0.0);
}

TEST_CASE("prf hand arithmetic") {
  const ClassMetrics m = prf({3, 1, 1, 0});
  CHECK(m.precision == doctest::Approx(0.75));
  CHECK(m.recall == doctest::Approx(0.75));
  CHECK(m.f1 == doctest::Approx(0.75));

  const ClassMetrics perfect = prf({4, 0, 0, 6});
  CHECK(perfect.precision == 1.0);
  CHECK(perfect.recall == 1.0);
  CHECK(perfect.f1 == 1.0);
}

TEST_CASE("macro_f1 hand cases") {
  const std::vector<VeracityLabel> golds{M, M, N, N};
  CHECK(macro_f1(golds, golds) == 1.0);

  const std::vector<VeracityLabel> preds{M, N, N, N};
  // F1(M) = 2/3, F1(N) = 0.8
  CHECK(macro_f1(golds, preds) == doctest::Approx(11.0 / 15.0).epsilon(1e-12));

  CHECK_THROWS_AS(macro_f1({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(macro_f1(golds, std::vector<VeracityLabel>{M}), std::invalid_argument);
}

TEST_CASE("macro_f1 is invariant to permuting the pairs") {
  Rng rng(18);
  std::vector<VeracityLabel> golds, preds;
  for (int i = 0; i < 40; ++i) {
    golds.push_back(rng.bernoulli(0.4) ? M : N);
    preds.push_back(rng.bernoulli(0.5) ? M : N);
  }
  const double base = macro_f1(golds, preds);

  std::vector<size_t> order(golds.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<VeracityLabel> g2, p2;
  for (size_t i : order) {
    g2.push_back(golds[i]);
    p2.push_back(preds[i]);
  }
  CHECK(macro_f1(g2, p2) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("macro_f1 is invariant to swapping class names") {
  Rng rng(19);
  std::vector<VeracityLabel> golds, preds, golds_swapped, preds_swapped;
  for (int i = 0; i < 40; ++i) {
    const VeracityLabel g = rng.bernoulli(0.3) ? M : N;
    const VeracityLabel p = rng.bernoulli(0.6) ? M : N;
    golds.push_back(g);
    preds.push_back(p);
    golds_swapped.push_back(g == M ? N : M);
    preds_swapped.push_back(p == M ? N : M);
  }
  CHECK(macro_f1(golds, preds) ==
        doctest::Approx(macro_f1(golds_swapped, preds_swapped)).epsilon(1e-12));
}

TEST_CASE("make_report fills per-class metrics and the macro mean") {
  const std::vector<VeracityLabel> golds{M, M, M, N, N, N, N, N};
  const std::vector<VeracityLabel> preds{M, N, N, N, N, N, N, N};
  const EvalReport r = make_report("unit", golds, preds);
  CHECK(r.condition == "unit");
  CHECK(r.n == 8);
  CHECK(r.mis.precision == doctest::Approx(1.0));
  CHECK(r.mis.recall == doctest::Approx(1.0 / 3.0));
  CHECK(r.mis.f1 == doctest::Approx(0.5));
  CHECK(r.non_mis.f1 == doctest::Approx(5.0 / 6.0));
  CHECK(r.macro_f1 == doctest::Approx(2.0 / 3.0));
  CHECK(r.macro_f1 == doctest::Approx(0.5 * (r.mis.f1 + r.non_mis.f1)));
}

TEST_CASE("report serialization is stable") {
  const std::vector<VeracityLabel> golds{M, N};
  const EvalReport r = make_report("cond", golds, golds);
  const std::string a = reports_to_json({&r, 1});
  const std::string b = reports_to_json({&r, 1});
  CHECK(a == b);
  CHECK(a.find("\"condition\": \"cond\"") != std::string::npos);
  CHECK(a.find("crowdshield-report/1") != std::string::npos);
}
