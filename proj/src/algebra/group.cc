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

#include "mmvc/algebra/group.h"

#include <algorithm>
#include <cctype>

#include "mmvc/common/error.h"

namespace mmvc {
namespace {

// Little-endian 256-bit helpers used for text conversion only.
using U256 = std::array<uint8_t, 32>;

uint32_t DivSmall(U256& v, uint32_t d) {
  uint32_t rem = 0;
  for (size_t i = v.size(); i-- > 0;) {
    uint32_t cur = (rem << 8) | v[i];
    v[i] = static_cast<uint8_t>(cur / d);
    rem = cur % d;
  }
  return rem;
}

bool MulAddSmall(U256& v, uint32_t mul, uint32_t add) {
  uint32_t carry = add;
  for (auto& byte : v) {
    uint32_t cur = byte * mul + carry;
    byte = static_cast<uint8_t>(cur & 0xff);
    carry = cur >> 8;
  }
  return carry == 0;
}

bool IsAllZero(const U256& v) {
  return std::all_of(v.begin(), v.end(), [](uint8_t b) { return b == 0; });
}

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string_view BackendName(BackendId id) {
  switch (id) {
    case BackendId::kProduction:
      return "production";
    case BackendId::kToy:
      return "toy";
  }
  return "unknown";
}

BackendId ParseBackend(std::string_view name) {
  if (name == "production") return BackendId::kProduction;
  if (name == "toy") return BackendId::kToy;
  throw Error("unknown group backend: " + std::string(name));
}

Scalar Group::FromUint(uint64_t v) const { return DoFromUint(v); }

Scalar Group::SampleScalar(Rng& rng) const {
  RecordOp(Op::kRng);
  return DoSampleScalar(rng);
}

Scalar Group::Add(const Scalar& a, const Scalar& b) const {
  RecordOp(Op::kAddP);
  return DoAdd(a, b);
}

Scalar Group::Sub(const Scalar& a, const Scalar& b) const {
  RecordOp(Op::kAddP);
  return DoSub(a, b);
}

Scalar Group::Mul(const Scalar& a, const Scalar& b) const {
  RecordOp(Op::kMulP);
  return DoMul(a, b);
}

GroupElement Group::SampleElement(Rng& rng) const {
  RecordOp(Op::kRng);
  return DoSampleElement(rng);
}

GroupElement Group::RandomGenerator(Rng& rng) const {
  CounterPause pause;
  GroupElement g;
  do {
    g = DoSampleElement(rng);
  } while (g == identity_);
  return g;
}

GroupElement Group::Exp(const GroupElement& base, const Scalar& e) const {
  RecordOp(Op::kExpG);
  return DoExp(base, e);
}

GroupElement Group::Mul(const GroupElement& a, const GroupElement& b) const {
  RecordOp(Op::kMulG);
  return DoMul(a, b);
}

GroupElement Group::MultiExp(std::span<const GroupElement> bases,
                             std::span<const Scalar> exps) const {
  MMVC_ENFORCE(bases.size() == exps.size(), "dimension mismatch");
  MMVC_ENFORCE(!bases.empty(), "dimension mismatch");
  RecordOp(Op::kExpG, bases.size());
  RecordOp(Op::kMulG, bases.size() - 1);
  GroupElement acc = DoExp(bases[0], exps[0]);
  for (size_t i = 1; i < bases.size(); ++i) {
    acc = DoMul(acc, DoExp(bases[i], exps[i]));
  }
  return acc;
}

void Group::EncodeScalar(const Scalar& s, std::span<uint8_t> out) const {
  const size_t n = scalar_bytes();
  MMVC_ENFORCE(out.size() == n, "scalar buffer size");
  for (size_t i = 0; i < n; ++i) {
    out[n - 1 - i] = s.bytes[i];
  }
}

Scalar Group::DecodeScalar(std::span<const uint8_t> in) const {
  const size_t n = scalar_bytes();
  if (in.size() != n) {
    throw ProtocolError("short read");
  }
  Scalar s;
  for (size_t i = 0; i < n; ++i) {
    s.bytes[i] = in[n - 1 - i];
  }
  if (!DoIsCanonicalScalar(s)) {
    throw ProtocolError("invalid scalar");
  }
  return s;
}

void Group::EncodeElement(const GroupElement& e,
                          std::span<uint8_t> out) const {
  MMVC_ENFORCE(out.size() == element_bytes(), "element buffer size");
  DoEncodeElement(e, out);
}

GroupElement Group::DecodeElement(std::span<const uint8_t> in) const {
  if (in.size() != element_bytes()) {
    throw ProtocolError("short read");
  }
  GroupElement e;
  if (!DoDecodeElement(in, &e)) {
    throw ProtocolError("invalid element");
  }
  return e;
}

bool Group::IsValidElementEncoding(std::span<const uint8_t> in) const {
  GroupElement e;
  return in.size() == element_bytes() && DoDecodeElement(in, &e);
}

std::string Group::ScalarToString(const Scalar& s) const {
  U256 v = s.bytes;
  if (IsAllZero(v)) {
    return "0";
  }
  std::string digits;
  while (!IsAllZero(v)) {
    digits.push_back(static_cast<char>('0' + DivSmall(v, 10)));
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Scalar Group::ParseScalar(std::string_view text) const {
  MMVC_ENFORCE(!text.empty(), "empty scalar literal");
  U256 v{};
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    for (char c : text.substr(2)) {
      int h = HexValue(c);
      MMVC_ENFORCE(h >= 0, "bad hex digit in scalar literal");
      MMVC_ENFORCE(MulAddSmall(v, 16, static_cast<uint32_t>(h)),
                   "scalar literal out of range");
    }
    Scalar s{v};
    MMVC_ENFORCE(DoIsCanonicalScalar(s), "scalar literal out of range");
    return s;
  }
  for (char c : text) {
    MMVC_ENFORCE(std::isdigit(static_cast<unsigned char>(c)),
                 "bad digit in scalar literal");
    MMVC_ENFORCE(MulAddSmall(v, 10, static_cast<uint32_t>(c - '0')),
                 "scalar literal out of range");
  }
  bool small = std::all_of(v.begin() + 8, v.end(),
                           [](uint8_t b) { return b == 0; });
  if (small) {
    uint64_t u = 0;
    for (size_t i = 0; i < 8; ++i) {
      u |= static_cast<uint64_t>(v[i]) << (8 * i);
    }
    return DoFromUint(u);
  }
  Scalar s{v};
  MMVC_ENFORCE(DoIsCanonicalScalar(s), "scalar literal out of range");
  return s;
}

std::shared_ptr<const Group> MakeGroup(BackendId id) {
  switch (id) {
    case BackendId::kProduction:
      return MakeProductionGroup();
    case BackendId::kToy:
      return MakeToyGroup();
  }
  throw Error("unknown group backend");
}

Scalar InnerProduct(const Group& group, std::span<const Scalar> a,
                    std::span<const Scalar> b) {
  MMVC_ENFORCE(a.size() == b.size(), "dimension mismatch");
  MMVC_ENFORCE(!a.empty(), "dimension mismatch");
  Scalar acc = group.Mul(a[0], b[0]);
  for (size_t i = 1; i < a.size(); ++i) {
    acc = group.Add(acc, group.Mul(a[i], b[i]));
  }
  return acc;
}

}  // namespace mmvc
