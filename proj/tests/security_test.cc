// Copyright 2026 The MMVC Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "mmvc/security/harness.h"
#include "mmvc/security/strategies.h"
#include "test_util.h"

namespace mmvc::security {
namespace {

using testing::ToyElementValue;

class LambdaAdversary : public Adversary {
 public:
  using Fn = std::function<Forgery(Oracles&, Rng&)>;
  explicit LambdaAdversary(Fn fn) : fn_(std::move(fn)) {}
  std::string name() const override { return "lambda"; }
  Forgery Attack(Oracles& o, Rng& rng) const override { return fn_(o, rng); }

 private:
  Fn fn_;
};

ExperimentConfig ToyConfig(size_t q, Variant v, size_t trials) {
  ExperimentConfig cfg;
  cfg.group = MakeToyGroup();
  cfg.q = q;
  cfg.variant = v;
  cfg.trials = trials;
  cfg.m = 2;
  cfg.d = 3;
  cfg.seed = 99;
  return cfg;
}

TEST(Bound, ClosedForm) {
  auto g = MakeToyGroup();
  EXPECT_DOUBLE_EQ(ForgeryBound(*g, 1), 1.0 / 101);
  EXPECT_DOUBLE_EQ(ForgeryBound(*g, 5), 5.0 / 97);
  EXPECT_LT(ForgeryBound(*MakeProductionGroup(), 1000), 1e-70);
}

TEST(ForgeryCondition, MatchesAlgebra) {
  auto g = MakeToyGroup();
  Rng rng(1);
  const GroupElement gen = g->RandomGenerator(rng);
  const auto r = RandomVector(*g, 2, rng);
  const auto y = RandomVector(*g, 2, rng);
  const GroupElement V = g->SampleElement(rng);
  EXPECT_FALSE(ForgeryCondition(*g, gen, r, y, y, V, V));
  auto y_hat = y;
  y_hat[1] = g->Add(y_hat[1], g->FromUint(3));
  // V-hat = V g^{r_2 * 3} satisfies the condition; V itself does not
  // unless r_2 = 0.
  const GroupElement shifted =
      g->Mul(V, g->Exp(gen, g->Mul(r[1], g->FromUint(3))));
  EXPECT_TRUE(ForgeryCondition(*g, gen, r, y, y_hat, V, shifted));
  EXPECT_EQ(ForgeryCondition(*g, gen, r, y, y_hat, V, V), g->IsZero(r[1]));
}

TEST(Harness, HonestNeverWins) {
  for (Variant v : {Variant::kStandard, Variant::kRandomTags}) {
    const auto est =
        MeasureSuccess(ToyConfig(3, v, 500), *MakeHonestStrategy());
    EXPECT_EQ(est.successes, 0u);
    EXPECT_EQ(est.trials, 500u);
  }
}

TEST(Harness, AllStrategiesRespectBoundWithRandomTags) {
  for (size_t q : {1u, 4u}) {
    for (const auto& adv : AllStrategies()) {
      const auto est =
          MeasureSuccess(ToyConfig(q, Variant::kRandomTags, 3000), *adv);
      EXPECT_TRUE(est.WithinBound())
          << adv->name() << " q=" << q << " rate=" << est.rate
          << " bound=" << est.bound;
    }
  }
}

// With real tags the toy group adds the chance that the key degenerates:
// k = 0 or VK_x = 1 lets scaled and replayed responses through, each with
// probability 1/p.
TEST(Harness, StandardVariantAddsOnlyDegenerateKeyEvents) {
  const double p = 101;
  for (size_t q : {1u, 4u}) {
    for (const auto& adv : AllStrategies()) {
      const auto est =
          MeasureSuccess(ToyConfig(q, Variant::kStandard, 3000), *adv);
      EXPECT_LE(est.rate, est.bound + 2 / p + 3 * est.bound_sigma)
          << adv->name() << " q=" << q << " rate=" << est.rate;
    }
  }
}

TEST(Harness, RandomOffsetHitsOneOverP) {
  const auto est = MeasureSuccess(ToyConfig(1, Variant::kRandomTags, 40000),
                                  *MakeRandomOffsetStrategy());
  const double p = 1.0 / 101;
  const double sigma = std::sqrt(p * (1 - p) / est.trials);
  EXPECT_NEAR(est.rate, p, 4 * sigma);
}

TEST(Harness, AdaptiveGuessingScalesWithQueries) {
  const size_t q = 20;
  const auto est = MeasureSuccess(ToyConfig(q, Variant::kRandomTags, 5000),
                                  *MakeAdaptiveOffsetStrategy());
  EXPECT_TRUE(est.WithinBound());
  // Distinct guesses succeed with probability q/p.
  const double p = static_cast<double>(q) / 101;
  EXPECT_NEAR(est.rate, p, 4 * std::sqrt(p * (1 - p) / est.trials));
}

TEST(Harness, VerifyBudgetReservesFinalForgery) {
  const ExperimentConfig cfg = ToyConfig(3, Variant::kStandard, 1);
  size_t answered = 0;
  bool threw = false;
  LambdaAdversary adv([&](Oracles& o, Rng& rng) {
    const Group& g = *o.public_params().group;
    const Matrix f = Matrix::Random(g, o.m(), o.d(), rng);
    const FunctionHandle h = o.KeyGen(f);
    const auto x = o.ProbGen(RandomVector(g, o.d(), rng));
    const ServerResponse resp = Compute(g, h.ek, x);
    try {
      while (true) {
        EXPECT_TRUE(o.Verify(h.id, x, resp).has_value());
        ++answered;
      }
    } catch (const Error&) {
      threw = true;
    }
    EXPECT_EQ(o.verify_queries_left(), 0u);
    return Forgery{h.id, x, resp};
  });
  const AdversaryOutcome out = RunExperiment(cfg, adv);
  EXPECT_TRUE(threw);
  EXPECT_EQ(answered, 2u);
  EXPECT_EQ(out.queries_used, 3u);
  EXPECT_FALSE(out.succeeded);
}

TEST(Harness, UnknownFunctionInForgeryIsRejected) {
  LambdaAdversary adv([](Oracles& o, Rng& rng) {
    const Group& g = *o.public_params().group;
    return Forgery{7, RandomVector(g, o.d(), rng),
                   {RandomVector(g, o.m(), rng), g.Identity()}};
  });
  EXPECT_THROW(RunExperiment(ToyConfig(1, Variant::kStandard, 1), adv), Error);
}

TEST(Harness, TrialsReplayDeterministically) {
  const ExperimentConfig cfg = ToyConfig(2, Variant::kStandard, 1);
  auto adv = MakeAdaptiveOffsetStrategy();
  for (uint64_t t = 0; t < 5; ++t) {
    const auto a = RunExperiment(cfg, *adv, t);
    const auto b = RunExperiment(cfg, *adv, t);
    EXPECT_EQ(a.succeeded, b.succeeded);
    ASSERT_EQ(a.transcript.size(), b.transcript.size());
    for (size_t i = 0; i < a.transcript.size(); ++i) {
      EXPECT_EQ(a.transcript[i].answer, b.transcript[i].answer);
    }
  }
}

TEST(Harness, RandomTagEntryPointChecksVariant) {
  auto adv = MakeHonestStrategy();
  EXPECT_THROW(
      RunRandomTagExperiment(ToyConfig(1, Variant::kStandard, 1), *adv),
      Error);
  EXPECT_FALSE(
      RunRandomTagExperiment(ToyConfig(1, Variant::kRandomTags, 1), *adv)
          .succeeded);
}

TEST(Harness, StrategyLookup) {
  for (const auto& adv : AllStrategies()) {
    EXPECT_EQ(MakeStrategy(adv->name())->name(), adv->name());
  }
  EXPECT_THROW(MakeStrategy("nope"), Error);
}

// With uniform tags the distribution of the evaluation key does not depend
// on r: over all tag vectors, every key appears equally often.
TEST(RandomTags, EvaluationKeyDistributionIndependentOfR) {
  auto g = MakeToyGroup();
  Rng rng(5);
  const PublicParams pk = mmvc::Setup(g, 2, rng);
  const Matrix f = Matrix::Random(*g, 2, 2, rng);
  std::vector<GroupElement> elements;
  for (uint64_t i = 0; i < testing::kToyOrder; ++i) {
    elements.push_back(g->Exp(g->Generator(), g->FromUint(i)));
  }
  auto key_multiset = [&](const std::vector<Scalar>& r) {
    std::vector<std::pair<uint64_t, uint64_t>> keys;
    for (const auto& z1 : elements) {
      for (const auto& z2 : elements) {
        const std::vector<GroupElement> tags = {z1, z2};
        const EvaluationKey ek = RandomTagEvaluationKey(pk, f, r, tags);
        EXPECT_EQ(ek.F, f);
        keys.emplace_back(ToyElementValue(*g, ek.W[0]),
                          ToyElementValue(*g, ek.W[1]));
      }
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  const auto a = key_multiset(UintVector(*g, {1, 2}));
  const auto b = key_multiset(UintVector(*g, {57, 99}));
  EXPECT_EQ(a, b);
  // Each key arises from exactly one tag vector.
  EXPECT_EQ(std::set(a.begin(), a.end()).size(), a.size());
}

}  // namespace
}  // namespace mmvc::security
