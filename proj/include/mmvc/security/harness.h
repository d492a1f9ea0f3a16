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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmvc/scheme/mmvc.h"

// Executable security experiment for private verification. A challenger
// runs Setup, answers the adversary's KeyGen/ProbGen/Verify oracle queries
// while keeping every verification key to itself, then checks the
// adversary's final forgery.
//
// Two variants:
//   kStandard     W_j = g^{s_j} R_j^k, accept iff V = g^{r.y} VK_x^k.
//   kRandomTags   W_j = g^{s_j} Z_j with fresh uniform Z_j per KeyGen query,
//                 accept iff V = g^{r.y} prod_j Z_j^{x_j}. With the weak-PRF
//                 term gone, forgery probability is information-theoretic
//                 and bounded by q / (p - q + 1).
//
// q bounds the number of verification equations the challenger evaluates
// on the adversary's behalf: Verify oracle queries plus the final forgery.
// The adversary wins if any of them accepts a y-hat other than F x.
namespace mmvc::security {

enum class Variant { kStandard, kRandomTags };

std::string_view VariantName(Variant v);

class Adversary;

struct ExperimentConfig {
  size_t q = 1;
  std::shared_ptr<const Group> group;
  size_t trials = 1;
  Variant variant = Variant::kStandard;
  size_t m = 1;
  size_t d = 2;
  uint64_t seed = 0;
};

struct OracleCall {
  enum class Kind { kKeyGen, kProbGen, kVerify };
  Kind kind;
  // Wire encoding of exactly what the adversary received.
  std::vector<uint8_t> answer;
};

struct AdversaryOutcome {
  bool succeeded = false;
  size_t queries_used = 0;  // verification equations evaluated
  std::vector<OracleCall> transcript;
};

struct FunctionHandle {
  size_t id;
  EvaluationKey ek;
};

struct Forgery {
  size_t function_id;
  std::vector<Scalar> x;
  ServerResponse response;
};

// The adversary's only view of the challenger. Nothing here reveals k, r or
// the random tags Z_j.
class Oracles {
 public:
  Oracles(const ExperimentConfig& cfg, Rng& challenger_rng);
  ~Oracles();

  const PublicParams& public_params() const { return pk_; }
  size_t m() const { return m_; }
  size_t d() const { return pk_.dimension(); }

  FunctionHandle KeyGen(const Matrix& f);
  // Returns sigma_x (= x); VK_x stays with the challenger.
  std::vector<Scalar> ProbGen(std::span<const Scalar> x);
  // Returns y or reject. Counts against q, and always leaves one
  // evaluation for the final forgery.
  std::optional<std::vector<Scalar>> Verify(size_t function_id,
                                            std::span<const Scalar> x,
                                            const ServerResponse& resp);
  size_t verify_queries_left() const;

 private:
  friend AdversaryOutcome RunExperiment(const ExperimentConfig& cfg,
                                        const Adversary& adversary,
                                        uint64_t trial);

  struct StoredFunction;

  // Evaluates the verification equation without touching the budget.
  std::optional<std::vector<Scalar>> Check(const StoredFunction& fn,
                                           std::span<const Scalar> x,
                                           const ServerResponse& resp) const;
  const StoredFunction& Lookup(size_t function_id) const;
  void Evaluate(size_t function_id, std::span<const Scalar> x,
                const ServerResponse& resp,
                std::optional<std::vector<Scalar>>* verdict);

  Variant variant_;
  size_t q_;
  size_t m_;
  Rng& rng_;
  PublicParams pk_;
  std::vector<StoredFunction> functions_;
  size_t evaluations_ = 0;
  bool forged_ = false;
  std::vector<OracleCall> transcript_;
};

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::string name() const = 0;
  // Must be a deterministic function of the oracle answers and rng.
  virtual Forgery Attack(Oracles& oracles, Rng& rng) const = 0;
};

// One run of the experiment. Trial t of a configuration always replays the
// same way.
AdversaryOutcome RunExperiment(const ExperimentConfig& cfg,
                               const Adversary& adversary, uint64_t trial = 0);

// The experiment with random tags; cfg.variant must be kRandomTags.
AdversaryOutcome RunRandomTagExperiment(const ExperimentConfig& cfg,
                                        const Adversary& adversary,
                                        uint64_t trial = 0);

struct SuccessEstimate {
  std::string strategy;
  size_t trials = 0;
  size_t successes = 0;
  double rate = 0;
  double bound = 0;  // q / (p - q + 1)
  // Standard deviation of the empirical rate if the true rate were `bound`.
  double bound_sigma = 0;

  bool WithinBound(double sigmas = 3.0) const {
    return rate <= bound + sigmas * bound_sigma;
  }
};

// Runs cfg.trials independent trials across `threads` workers and merges
// the results.
SuccessEstimate MeasureSuccess(const ExperimentConfig& cfg,
                               const Adversary& adversary,
                               size_t threads = 1);

// q / (p - q + 1) for the group order p.
double ForgeryBound(const Group& group, size_t q);

// (y-hat != y) and V-hat / V == g^{r.(y-hat - y)}.
bool ForgeryCondition(const Group& group, const GroupElement& g,
                      std::span<const Scalar> r, std::span<const Scalar> y,
                      std::span<const Scalar> y_hat, const GroupElement& V,
                      const GroupElement& V_hat);

// Evaluation key of the random-tag KeyGen for given r and tags Z. Exposed
// so tests can study how the answer depends on r.
EvaluationKey RandomTagEvaluationKey(const PublicParams& pk, const Matrix& f,
                                     std::span<const Scalar> r,
                                     std::span<const GroupElement> tags);

}  // namespace mmvc::security
