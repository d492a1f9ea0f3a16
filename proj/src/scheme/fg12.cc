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

#include "mmvc/scheme/fg12.h"

#include "mmvc/common/error.h"

namespace mmvc::fg12 {

KeyPair KeyGen(const PublicParams& pk, std::span<const Scalar> f, Rng& rng) {
  MMVC_ENFORCE(f.size() == pk.dimension(), "d mismatch");
  const Group& group = *pk.group;
  FunctionKey vk;
  vk.k = group.SampleScalar(rng);
  vk.alpha = group.SampleScalar(rng);
  EvaluationKey ek = DeriveEvaluationKey(pk, f, vk);
  return KeyPair{std::move(ek), vk};
}

EvaluationKey DeriveEvaluationKey(const PublicParams& pk,
                                  std::span<const Scalar> f,
                                  const FunctionKey& vk) {
  MMVC_ENFORCE(f.size() == pk.dimension(), "d mismatch");
  const Group& group = *pk.group;
  EvaluationKey ek{{f.begin(), f.end()}, {}};
  ek.W.reserve(f.size());
  for (size_t j = 0; j < f.size(); ++j) {
    const Scalar af = group.Mul(vk.alpha, f[j]);
    ek.W.push_back(group.Mul(group.Exp(pk.g, af), group.Exp(pk.R[j], vk.k)));
  }
  return ek;
}

Response Compute(const Group& group, const EvaluationKey& ek,
                 std::span<const Scalar> x) {
  MMVC_ENFORCE(x.size() == ek.f.size() && ek.W.size() == ek.f.size(),
               "d mismatch");
  return Response{InnerProduct(group, ek.f, x), group.MultiExp(ek.W, x)};
}

std::optional<Scalar> Verify(const PublicParams& pk, const FunctionKey& vk,
                             const GroupElement& vk_x, const Scalar& y,
                             const GroupElement& V) {
  const Group& group = *pk.group;
  const GroupElement expected = group.Mul(
      group.Exp(pk.g, group.Mul(vk.alpha, y)), group.Exp(vk_x, vk.k));
  if (expected != V) {
    return std::nullopt;
  }
  return y;
}

MatrixKeys MatrixKeyGen(const PublicParams& pk, const Matrix& f, Rng& rng) {
  MMVC_ENFORCE(f.cols() == pk.dimension(), "d mismatch");
  MatrixKeys keys;
  keys.eks.reserve(f.rows());
  keys.vks.reserve(f.rows());
  for (size_t i = 0; i < f.rows(); ++i) {
    KeyPair kp = KeyGen(pk, f.row(i), rng);
    keys.eks.push_back(std::move(kp.ek));
    keys.vks.push_back(kp.vk);
  }
  return keys;
}

std::vector<Response> MatrixCompute(const Group& group,
                                    std::span<const EvaluationKey> eks,
                                    std::span<const Scalar> x) {
  std::vector<Response> out;
  out.reserve(eks.size());
  for (const auto& ek : eks) {
    out.push_back(Compute(group, ek, x));
  }
  return out;
}

std::optional<std::vector<Scalar>> MatrixVerify(
    const PublicParams& pk, std::span<const FunctionKey> vks,
    const GroupElement& vk_x, std::span<const Response> responses) {
  MMVC_ENFORCE(vks.size() == responses.size(), "shape mismatch");
  std::vector<Scalar> y;
  y.reserve(vks.size());
  bool ok = true;
  // Every row is checked even after a reject so the cost does not depend on
  // which row failed.
  for (size_t i = 0; i < vks.size(); ++i) {
    auto row = Verify(pk, vks[i], vk_x, responses[i].y, responses[i].V);
    if (row) {
      y.push_back(*row);
    } else {
      ok = false;
    }
  }
  if (!ok) return std::nullopt;
  return y;
}

MatrixRun MatrixComputeAndVerify(const PublicParams& pk, const Matrix& f,
                                 std::span<const Scalar> x, Rng& rng) {
  MatrixRun run;
  run.keys = MatrixKeyGen(pk, f, rng);
  run.encoding = ProbGen(pk, x);
  run.responses = MatrixCompute(*pk.group, run.keys.eks, x);
  run.result = MatrixVerify(pk, run.keys.vks, run.encoding.vk_x,
                            run.responses);
  return run;
}

}  // namespace mmvc::fg12
