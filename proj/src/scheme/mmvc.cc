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

#include "mmvc/scheme/mmvc.h"

#include "mmvc/common/error.h"

namespace mmvc {

PublicParams Setup(std::shared_ptr<const Group> group, size_t d, Rng& rng) {
  MMVC_ENFORCE(group != nullptr, "no group");
  MMVC_ENFORCE(d >= 1, "empty dimension");
  PublicParams pk;
  pk.g = group->RandomGenerator(rng);
  pk.R.reserve(d);
  for (size_t j = 0; j < d; ++j) {
    pk.R.push_back(group->SampleElement(rng));
  }
  pk.group = std::move(group);
  return pk;
}

std::vector<Scalar> CombineRows(const Group& group, std::span<const Scalar> r,
                                const Matrix& f) {
  MMVC_ENFORCE(r.size() == f.rows(), "m mismatch");
  MMVC_ENFORCE(f.rows() >= 1, "m mismatch");
  std::vector<Scalar> s;
  s.reserve(f.cols());
  for (size_t j = 0; j < f.cols(); ++j) {
    Scalar acc = group.Mul(r[0], f.at(0, j));
    for (size_t i = 1; i < f.rows(); ++i) {
      acc = group.Add(acc, group.Mul(r[i], f.at(i, j)));
    }
    s.push_back(acc);
  }
  return s;
}

KeyPair KeyGen(const PublicParams& pk, const Matrix& f, Rng& rng) {
  MMVC_ENFORCE(f.cols() == pk.dimension(), "d mismatch");
  MMVC_ENFORCE(f.rows() >= 1, "m mismatch");
  const Group& group = *pk.group;
  FunctionVerificationKey vk;
  vk.k = group.SampleScalar(rng);
  vk.r = RandomVector(group, f.rows(), rng);
  EvaluationKey ek = DeriveEvaluationKey(pk, f, vk);
  return KeyPair{std::move(ek), std::move(vk)};
}

EvaluationKey DeriveEvaluationKey(const PublicParams& pk, const Matrix& f,
                                  const FunctionVerificationKey& vk) {
  MMVC_ENFORCE(f.cols() == pk.dimension(), "d mismatch");
  const Group& group = *pk.group;
  const std::vector<Scalar> s = CombineRows(group, vk.r, f);
  EvaluationKey ek{f, {}};
  ek.W.reserve(s.size());
  for (size_t j = 0; j < s.size(); ++j) {
    ek.W.push_back(
        group.Mul(group.Exp(pk.g, s[j]), group.Exp(pk.R[j], vk.k)));
  }
  return ek;
}

InputEncoding ProbGen(const PublicParams& pk, std::span<const Scalar> x) {
  MMVC_ENFORCE(x.size() == pk.dimension(), "d mismatch");
  return InputEncoding{{x.begin(), x.end()}, pk.group->MultiExp(pk.R, x)};
}

ServerResponse Compute(const Group& group, const EvaluationKey& ek,
                       std::span<const Scalar> x) {
  MMVC_ENFORCE(x.size() == ek.F.cols() && ek.W.size() == ek.F.cols(),
               "d mismatch");
  ServerResponse resp;
  resp.y = MatrixVector(group, ek.F, x);
  resp.V = group.MultiExp(ek.W, x);
  return resp;
}

std::optional<std::vector<Scalar>> Verify(const PublicParams& pk,
                                          const FunctionVerificationKey& vk,
                                          const GroupElement& vk_x,
                                          const ServerResponse& resp) {
  MMVC_ENFORCE(resp.y.size() == vk.r.size() && !vk.r.empty(),
               "shape mismatch");
  const Group& group = *pk.group;
  const Scalar ry = InnerProduct(group, vk.r, resp.y);
  const GroupElement expected =
      group.Mul(group.Exp(pk.g, ry), group.Exp(vk_x, vk.k));
  if (expected != resp.V) {
    return std::nullopt;
  }
  return resp.y;
}

}  // namespace mmvc
