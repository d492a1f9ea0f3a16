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

#include "mmvc/security/strategies.h"

#include <set>
#include <string>

#include "mmvc/common/error.h"

namespace mmvc::security {
namespace {

struct HonestRun {
  FunctionHandle fn;
  std::vector<Scalar> x;
  ServerResponse resp;
};

HonestRun Prepare(Oracles& oracles, Rng& rng) {
  const PublicParams& pk = oracles.public_params();
  const Group& group = *pk.group;
  HonestRun run;
  run.fn = oracles.KeyGen(Matrix::Random(group, oracles.m(), oracles.d(), rng));
  run.x = oracles.ProbGen(RandomVector(group, oracles.d(), rng));
  run.resp = Compute(group, run.fn.ek, run.x);
  return run;
}

Scalar NonZero(const Group& group, Rng& rng) {
  Scalar c;
  do {
    c = group.SampleScalar(rng);
  } while (group.IsZero(c));
  return c;
}

class Honest final : public Adversary {
 public:
  std::string name() const override { return "honest"; }
  Forgery Attack(Oracles& oracles, Rng& rng) const override {
    HonestRun run = Prepare(oracles, rng);
    return Forgery{run.fn.id, run.x, run.resp};
  }
};

class BitFlip final : public Adversary {
 public:
  std::string name() const override { return "bit-flip"; }
  Forgery Attack(Oracles& oracles, Rng& rng) const override {
    HonestRun run = Prepare(oracles, rng);
    const Group& group = *oracles.public_params().group;
    run.resp.y[0] = group.Add(run.resp.y[0], group.One());
    return Forgery{run.fn.id, run.x, run.resp};
  }
};

class RandomOffset final : public Adversary {
 public:
  std::string name() const override { return "random-offset"; }
  Forgery Attack(Oracles& oracles, Rng& rng) const override {
    HonestRun run = Prepare(oracles, rng);
    const PublicParams& pk = oracles.public_params();
    const Group& group = *pk.group;
    run.resp.y[0] = group.Add(run.resp.y[0], NonZero(group, rng));
    run.resp.V = group.Mul(run.resp.V, group.Exp(pk.g, group.SampleScalar(rng)));
    return Forgery{run.fn.id, run.x, run.resp};
  }
};

class Scaled final : public Adversary {
 public:
  std::string name() const override { return "scaled"; }
  Forgery Attack(Oracles& oracles, Rng& rng) const override {
    HonestRun run = Prepare(oracles, rng);
    const Group& group = *oracles.public_params().group;
    Scalar c;
    do {
      c = NonZero(group, rng);
    } while (c == group.One());
    for (auto& yi : run.resp.y) yi = group.Mul(c, yi);
    run.resp.V = group.Exp(run.resp.V, c);
    return Forgery{run.fn.id, run.x, run.resp};
  }
};

class Replay final : public Adversary {
 public:
  std::string name() const override { return "replay"; }
  Forgery Attack(Oracles& oracles, Rng& rng) const override {
    HonestRun run = Prepare(oracles, rng);
    const Group& group = *oracles.public_params().group;
    std::vector<Scalar> other;
    do {
      other = oracles.ProbGen(RandomVector(group, oracles.d(), rng));
    } while (other == run.x);
    return Forgery{run.fn.id, std::move(other), run.resp};
  }
};

class AdaptiveOffset final : public Adversary {
 public:
  std::string name() const override { return "adaptive-offset"; }
  Forgery Attack(Oracles& oracles, Rng& rng) const override {
    HonestRun run = Prepare(oracles, rng);
    const PublicParams& pk = oracles.public_params();
    const Group& group = *pk.group;
    ServerResponse base = run.resp;
    base.y[0] = group.Add(base.y[0], group.One());

    std::set<std::array<uint8_t, 32>> tried;
    auto fresh_guess = [&] {
      Scalar v;
      do {
        v = group.SampleScalar(rng);
      } while (!tried.insert(v.bytes).second);
      ServerResponse guess = base;
      guess.V = group.Mul(run.resp.V, group.Exp(pk.g, v));
      return guess;
    };
    while (oracles.verify_queries_left() > 0) {
      ServerResponse guess = fresh_guess();
      if (oracles.Verify(run.fn.id, run.x, guess)) {
        return Forgery{run.fn.id, run.x, guess};
      }
    }
    return Forgery{run.fn.id, run.x, fresh_guess()};
  }
};

}  // namespace

std::unique_ptr<Adversary> MakeHonestStrategy() {
  return std::make_unique<Honest>();
}
std::unique_ptr<Adversary> MakeBitFlipStrategy() {
  return std::make_unique<BitFlip>();
}
std::unique_ptr<Adversary> MakeRandomOffsetStrategy() {
  return std::make_unique<RandomOffset>();
}
std::unique_ptr<Adversary> MakeScaledStrategy() {
  return std::make_unique<Scaled>();
}
std::unique_ptr<Adversary> MakeReplayStrategy() {
  return std::make_unique<Replay>();
}
std::unique_ptr<Adversary> MakeAdaptiveOffsetStrategy() {
  return std::make_unique<AdaptiveOffset>();
}

std::vector<std::unique_ptr<Adversary>> AllStrategies() {
  std::vector<std::unique_ptr<Adversary>> all;
  all.push_back(MakeHonestStrategy());
  all.push_back(MakeBitFlipStrategy());
  all.push_back(MakeRandomOffsetStrategy());
  all.push_back(MakeScaledStrategy());
  all.push_back(MakeReplayStrategy());
  all.push_back(MakeAdaptiveOffsetStrategy());
  return all;
}

std::unique_ptr<Adversary> MakeStrategy(std::string_view name) {
  for (auto& s : AllStrategies()) {
    if (s->name() == name) return std::move(s);
  }
  throw Error("unknown strategy: " + std::string(name));
}

}  // namespace mmvc::security
