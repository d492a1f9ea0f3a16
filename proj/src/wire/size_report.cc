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

#include "mmvc/wire/size_report.h"

#include "mmvc/scheme/fg12.h"
#include "mmvc/scheme/mmvc.h"
#include "mmvc/wire/codec.h"

namespace mmvc::wire {
namespace {

uint64_t ContentBits(const Bytes& payload, MessageType type) {
  return 8 * (payload.size() - DimensionHeaderBytes(type));
}

}  // namespace

SizeReport ComputeSizeReport(const Workload& w, uint64_t lp, uint64_t lg) {
  const uint64_t a = w.a, b = w.b, m = w.m, d = w.d;
  SizeReport r{w, lp, lg, {}, {}};
  r.mmvc.ek_bits = a * m * d * lp + a * d * lg;
  r.mmvc.enc_bits = b * d * lp;
  r.mmvc.resp_bits = a * b * m * lp + a * b * lg;
  r.mmvc.vkf_bits = a * (m + 1) * lp;
  r.mmvc.vkx_bits = b * lg;

  r.fg12.ek_bits = a * m * d * lp + a * m * d * lg;
  r.fg12.enc_bits = b * d * lp;
  r.fg12.resp_bits = a * b * m * lp + a * b * m * lg;
  r.fg12.vkf_bits = 2 * a * m * lp;
  r.fg12.vkx_bits = b * lg;
  return r;
}

SizeReport ComputeSizeReport(const Workload& w, const Group& group) {
  return ComputeSizeReport(w, 8 * group.scalar_bytes(),
                           8 * group.element_bytes());
}

MeasuredSizes MeasureSizes(const Workload& w,
                           std::shared_ptr<const Group> group, Rng& rng) {
  const Group& g = *group;
  const PublicParams pk = Setup(group, w.d, rng);
  MeasuredSizes out;

  std::vector<InputEncoding> inputs;
  for (uint64_t j = 0; j < w.b; ++j) {
    inputs.push_back(ProbGen(pk, RandomVector(g, w.d, rng)));
    const auto& enc = inputs.back();
    const uint64_t enc_bits =
        ContentBits(EncodeEncoding(g, enc.x), MessageType::kEncoding);
    const uint64_t vkx_bits =
        ContentBits(EncodeInputKey(g, enc.vk_x), MessageType::kInputKey);
    // sigma_x and VK_x are identical in both schemes.
    out.mmvc.enc_bits += enc_bits;
    out.fg12.enc_bits += enc_bits;
    out.mmvc.vkx_bits += vkx_bits;
    out.fg12.vkx_bits += vkx_bits;
  }

  for (uint64_t i = 0; i < w.a; ++i) {
    const Matrix f = Matrix::Random(g, w.m, w.d, rng);

    const KeyPair kp = KeyGen(pk, f, rng);
    out.mmvc.ek_bits += ContentBits(EncodeEvaluationKey(g, kp.ek),
                                    MessageType::kEvaluationKey);
    out.mmvc.vkf_bits +=
        ContentBits(EncodeFunctionKey(g, kp.vk), MessageType::kFunctionKey);

    // A single-row instance travels as an m = 1 EKF/RESP/VKF whose r is
    // (alpha).
    const fg12::MatrixKeys rows = fg12::MatrixKeyGen(pk, f, rng);
    for (size_t r = 0; r < rows.eks.size(); ++r) {
      const EvaluationKey row_ek{Matrix(1, w.d, rows.eks[r].f),
                                 rows.eks[r].W};
      out.fg12.ek_bits += ContentBits(EncodeEvaluationKey(g, row_ek),
                                      MessageType::kEvaluationKey);
      const FunctionVerificationKey row_vk{rows.vks[r].k, {rows.vks[r].alpha}};
      out.fg12.vkf_bits +=
          ContentBits(EncodeFunctionKey(g, row_vk), MessageType::kFunctionKey);
    }

    for (const auto& enc : inputs) {
      out.mmvc.resp_bits += ContentBits(
          EncodeResponse(g, Compute(g, kp.ek, enc.x)), MessageType::kResponse);
      for (const auto& resp : fg12::MatrixCompute(g, rows.eks, enc.x)) {
        out.fg12.resp_bits +=
            ContentBits(EncodeResponse(g, ServerResponse{{resp.y}, resp.V}),
                        MessageType::kResponse);
      }
    }
  }
  return out;
}

}  // namespace mmvc::wire
