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

#include <optional>
#include <span>
#include <vector>

#include "mmvc/scheme/mmvc.h"

// Single-row multi-function scheme for linear functions f in Z_p^{1 x d}:
// W_j = g^{alpha f_j} R_j^k, V = prod_j W_j^{x_j}, accept iff
// V = g^{alpha y} (VK_x)^k. Input preparation (ProbGen) is shared with the
// multi-matrix scheme.
namespace mmvc::fg12 {

struct FunctionKey {
  Scalar k;
  Scalar alpha;

  friend bool operator==(const FunctionKey&, const FunctionKey&) = default;
};

struct EvaluationKey {
  std::vector<Scalar> f;
  std::vector<GroupElement> W;

  friend bool operator==(const EvaluationKey&, const EvaluationKey&) = default;
};

struct KeyPair {
  EvaluationKey ek;
  FunctionKey vk;
};

struct Response {
  Scalar y;
  GroupElement V;

  friend bool operator==(const Response&, const Response&) = default;
};

KeyPair KeyGen(const PublicParams& pk, std::span<const Scalar> f, Rng& rng);
EvaluationKey DeriveEvaluationKey(const PublicParams& pk,
                                  std::span<const Scalar> f,
                                  const FunctionKey& vk);
Response Compute(const Group& group, const EvaluationKey& ek,
                 std::span<const Scalar> x);
std::optional<Scalar> Verify(const PublicParams& pk, const FunctionKey& vk,
                             const GroupElement& vk_x, const Scalar& y,
                             const GroupElement& V);

// Baseline for an m x d matrix: one independent single-row instance per
// row, each with its own (k, alpha).
struct MatrixKeys {
  std::vector<EvaluationKey> eks;
  std::vector<FunctionKey> vks;
};

MatrixKeys MatrixKeyGen(const PublicParams& pk, const Matrix& f, Rng& rng);
std::vector<Response> MatrixCompute(const Group& group,
                                    std::span<const EvaluationKey> eks,
                                    std::span<const Scalar> x);
// y if every row verifies, std::nullopt if any row rejects.
std::optional<std::vector<Scalar>> MatrixVerify(
    const PublicParams& pk, std::span<const FunctionKey> vks,
    const GroupElement& vk_x, std::span<const Response> responses);

struct MatrixRun {
  MatrixKeys keys;
  InputEncoding encoding;
  std::vector<Response> responses;
  std::optional<std::vector<Scalar>> result;
};

// KeyGen, ProbGen, Compute and Verify for every row of F on input x.
MatrixRun MatrixComputeAndVerify(const PublicParams& pk, const Matrix& f,
                                 std::span<const Scalar> x, Rng& rng);

}  // namespace mmvc::fg12
