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

#include "mmvc/security/harness.h"

#include <cmath>
#include <string>
#include <thread>

#include "mmvc/common/error.h"
#include "mmvc/wire/codec.h"

namespace mmvc::security {

struct Oracles::StoredFunction {
  Matrix f;
  FunctionVerificationKey vk;       // kStandard: (k, r); kRandomTags: r only
  std::vector<GroupElement> tags;   // kRandomTags only
};

std::string_view VariantName(Variant v) {
  return v == Variant::kStandard ? "standard" : "random_tags";
}

Oracles::Oracles(const ExperimentConfig& cfg, Rng& challenger_rng)
    : variant_(cfg.variant), q_(cfg.q), m_(cfg.m), rng_(challenger_rng) {
  MMVC_ENFORCE(cfg.q >= 1, "q must be at least 1");
  MMVC_ENFORCE(cfg.m >= 1, "m mismatch");
  pk_ = Setup(cfg.group, cfg.d, rng_);
}

Oracles::~Oracles() = default;

FunctionHandle Oracles::KeyGen(const Matrix& f) {
  MMVC_ENFORCE(f.rows() == m_, "m mismatch");
  MMVC_ENFORCE(f.cols() == pk_.dimension(), "d mismatch");
  const Group& group = *pk_.group;
  StoredFunction fn{f, {}, {}};
  EvaluationKey ek;
  if (variant_ == Variant::kStandard) {
    KeyPair kp = mmvc::KeyGen(pk_, f, rng_);
    fn.vk = std::move(kp.vk);
    ek = std::move(kp.ek);
  } else {
    fn.vk.r = RandomVector(group, m_, rng_);
    for (size_t j = 0; j < pk_.dimension(); ++j) {
      fn.tags.push_back(group.SampleElement(rng_));
    }
    ek = RandomTagEvaluationKey(pk_, f, fn.vk.r, fn.tags);
  }
  functions_.push_back(std::move(fn));
  transcript_.push_back(
      {OracleCall::Kind::kKeyGen, wire::EncodeEvaluationKey(group, ek)});
  return FunctionHandle{functions_.size() - 1, std::move(ek)};
}

std::vector<Scalar> Oracles::ProbGen(std::span<const Scalar> x) {
  MMVC_ENFORCE(x.size() == pk_.dimension(), "d mismatch");
  transcript_.push_back(
      {OracleCall::Kind::kProbGen, wire::EncodeEncoding(*pk_.group, x)});
  return {x.begin(), x.end()};
}

std::optional<std::vector<Scalar>> Oracles::Verify(
    size_t function_id, std::span<const Scalar> x,
    const ServerResponse& resp) {
  if (verify_queries_left() == 0) {
    throw Error("query budget exceeded");
  }
  std::optional<std::vector<Scalar>> verdict;
  Evaluate(function_id, x, resp, &verdict);
  return verdict;
}

size_t Oracles::verify_queries_left() const {
  // One evaluation is reserved for the final forgery.
  return evaluations_ + 1 >= q_ ? 0 : q_ - 1 - evaluations_;
}

const Oracles::StoredFunction& Oracles::Lookup(size_t function_id) const {
  // The final forgery must name a function the adversary obtained from the
  // KeyGen oracle; VK_f is undefined otherwise.
  MMVC_ENFORCE(function_id < functions_.size(), "unknown function");
  return functions_[function_id];
}

std::optional<std::vector<Scalar>> Oracles::Check(
    const StoredFunction& fn, std::span<const Scalar> x,
    const ServerResponse& resp) const {
  MMVC_ENFORCE(x.size() == pk_.dimension(), "d mismatch");
  if (resp.y.size() != m_) {
    return std::nullopt;
  }
  const Group& group = *pk_.group;
  if (variant_ == Variant::kStandard) {
    return mmvc::Verify(pk_, fn.vk, mmvc::ProbGen(pk_, x).vk_x, resp);
  }
  const GroupElement expected =
      group.Mul(group.Exp(pk_.g, InnerProduct(group, fn.vk.r, resp.y)),
                group.MultiExp(fn.tags, x));
  if (expected != resp.V) {
    return std::nullopt;
  }
  return resp.y;
}

void Oracles::Evaluate(size_t function_id, std::span<const Scalar> x,
                       const ServerResponse& resp,
                       std::optional<std::vector<Scalar>>* verdict) {
  const StoredFunction& fn = Lookup(function_id);
  *verdict = Check(fn, x, resp);
  ++evaluations_;
  std::vector<uint8_t> answer{static_cast<uint8_t>(verdict->has_value())};
  if (*verdict) {
    auto y = wire::EncodeEncoding(*pk_.group, **verdict);
    answer.insert(answer.end(), y.begin(), y.end());
  }
  transcript_.push_back({OracleCall::Kind::kVerify, std::move(answer)});
}

AdversaryOutcome RunExperiment(const ExperimentConfig& cfg,
                               const Adversary& adversary, uint64_t trial) {
  MMVC_ENFORCE(cfg.group != nullptr, "no group");
  const Rng root(cfg.seed);
  Rng challenger_rng = root.Fork(2 * trial);
  Rng adversary_rng = root.Fork(2 * trial + 1);

  Oracles oracles(cfg, challenger_rng);
  const Forgery forgery = adversary.Attack(oracles, adversary_rng);

  std::optional<std::vector<Scalar>> y_hat;
  oracles.Evaluate(forgery.function_id, forgery.x, forgery.response, &y_hat);

  const auto& fn = oracles.Lookup(forgery.function_id);
  AdversaryOutcome out;
  out.succeeded =
      y_hat.has_value() &&
      *y_hat != MatrixVector(*oracles.pk_.group, fn.f, forgery.x);
  out.queries_used = oracles.evaluations_;
  out.transcript = std::move(oracles.transcript_);
  return out;
}

AdversaryOutcome RunRandomTagExperiment(const ExperimentConfig& cfg,
                                        const Adversary& adversary,
                                        uint64_t trial) {
  MMVC_ENFORCE(cfg.variant == Variant::kRandomTags, "variant mismatch");
  return RunExperiment(cfg, adversary, trial);
}

double ForgeryBound(const Group& group, size_t q) {
  const long double p = std::stold(group.description().order_decimal);
  const long double denom = p - static_cast<long double>(q) + 1;
  if (denom <= q) return 1.0;
  return static_cast<double>(static_cast<long double>(q) / denom);
}

SuccessEstimate MeasureSuccess(const ExperimentConfig& cfg,
                               const Adversary& adversary, size_t threads) {
  MMVC_ENFORCE(cfg.trials >= 1, "trials must be at least 1");
  threads = std::max<size_t>(1, std::min(threads, cfg.trials));
  std::vector<size_t> wins(threads, 0);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](size_t w) {
    try {
      for (size_t t = w; t < cfg.trials; t += threads) {
        if (RunExperiment(cfg, adversary, t).succeeded) ++wins[w];
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SuccessEstimate est;
  est.strategy = adversary.name();
  est.trials = cfg.trials;
  for (size_t w : wins) est.successes += w;
  est.rate = static_cast<double>(est.successes) / cfg.trials;
  est.bound = ForgeryBound(*cfg.group, cfg.q);
  est.bound_sigma = std::sqrt(est.bound * (1 - est.bound) / cfg.trials);
  return est;
}

bool ForgeryCondition(const Group& group, const GroupElement& g,
                      std::span<const Scalar> r, std::span<const Scalar> y,
                      std::span<const Scalar> y_hat, const GroupElement& V,
                      const GroupElement& V_hat) {
  MMVC_ENFORCE(r.size() == y.size() && y.size() == y_hat.size() && !r.empty(),
               "shape mismatch");
  if (std::equal(y.begin(), y.end(), y_hat.begin())) {
    return false;
  }
  std::vector<Scalar> diff;
  diff.reserve(y.size());
  for (size_t i = 0; i < y.size(); ++i) diff.push_back(group.Sub(y_hat[i], y[i]));
  return V_hat == group.Mul(V, group.Exp(g, InnerProduct(group, r, diff)));
}

EvaluationKey RandomTagEvaluationKey(const PublicParams& pk, const Matrix& f,
                                     std::span<const Scalar> r,
                                     std::span<const GroupElement> tags) {
  MMVC_ENFORCE(tags.size() == pk.dimension() && f.cols() == pk.dimension(),
               "d mismatch");
  const Group& group = *pk.group;
  const std::vector<Scalar> s = CombineRows(group, r, f);
  EvaluationKey ek{f, {}};
  for (size_t j = 0; j < s.size(); ++j) {
    ek.W.push_back(group.Mul(group.Exp(pk.g, s[j]), tags[j]));
  }
  return ek;
}

}  // namespace mmvc::security
