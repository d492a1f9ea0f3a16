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

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mmvc/algebra/group.h"
#include "mmvc/scheme/matrix.h"

namespace mmvc {

// PK = (p, G, g, R_1..R_d). The private setup parameters are empty, so
// anyone holding PK can prepare functions and inputs.
struct PublicParams {
  std::shared_ptr<const Group> group;
  GroupElement g;
  std::vector<GroupElement> R;

  size_t dimension() const { return R.size(); }
};

// EK_F = (F, W) with W_j = g^{s_j} R_j^k, s = rF.
struct EvaluationKey {
  Matrix F;
  std::vector<GroupElement> W;

  friend bool operator==(const EvaluationKey&, const EvaluationKey&) = default;
};

// VK_F = (k, r). Private to the client.
struct FunctionVerificationKey {
  Scalar k;
  std::vector<Scalar> r;

  friend bool operator==(const FunctionVerificationKey&,
                         const FunctionVerificationKey&) = default;
};

struct KeyPair {
  EvaluationKey ek;
  FunctionVerificationKey vk;
};

// sigma_x = x, plus VK_x = prod_j R_j^{x_j}.
struct InputEncoding {
  std::vector<Scalar> x;
  GroupElement vk_x;
};

// sigma_y = (y, V).
struct ServerResponse {
  std::vector<Scalar> y;
  GroupElement V;

  friend bool operator==(const ServerResponse&, const ServerResponse&) = default;
};

PublicParams Setup(std::shared_ptr<const Group> group, size_t d, Rng& rng);

// s_j = sum_i r_i F_ij. Exposed for testing; s never leaves KeyGen.
std::vector<Scalar> CombineRows(const Group& group, std::span<const Scalar> r,
                                const Matrix& f);

KeyPair KeyGen(const PublicParams& pk, const Matrix& f, Rng& rng);

// Deterministic half of KeyGen for an already chosen VK_F.
EvaluationKey DeriveEvaluationKey(const PublicParams& pk, const Matrix& f,
                                  const FunctionVerificationKey& vk);

InputEncoding ProbGen(const PublicParams& pk, std::span<const Scalar> x);

// Server side. Uses only public data.
ServerResponse Compute(const Group& group, const EvaluationKey& ek,
                       std::span<const Scalar> x);

// Returns y when V = g^{r.y} (VK_x)^k, std::nullopt (reject) otherwise.
// Throws only on structurally inconsistent arguments.
std::optional<std::vector<Scalar>> Verify(const PublicParams& pk,
                                          const FunctionVerificationKey& vk,
                                          const GroupElement& vk_x,
                                          const ServerResponse& resp);

}  // namespace mmvc
