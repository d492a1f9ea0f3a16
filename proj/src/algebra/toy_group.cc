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

#include <array>
#include <vector>

#include "mmvc/algebra/group.h"
#include "mmvc/common/error.h"

namespace mmvc {
namespace {

// The order-101 subgroup of (Z/607Z)^*. 607 is prime and 606 = 2 * 3 * 101,
// so sixth powers of a primitive root generate the subgroup. Small enough
// to enumerate exhaustively in tests.
constexpr uint32_t kModulus = 607;
constexpr uint32_t kOrder = 101;

uint32_t PowMod(uint32_t base, uint32_t e, uint32_t mod) {
  uint64_t result = 1;
  uint64_t b = base % mod;
  while (e > 0) {
    if (e & 1) result = result * b % mod;
    b = b * b % mod;
    e >>= 1;
  }
  return static_cast<uint32_t>(result);
}

uint32_t SmallestPrimitiveRoot() {
  const uint32_t n = kModulus - 1;
  for (uint32_t c = 2; c < kModulus; ++c) {
    if (PowMod(c, n / 2, kModulus) != 1 && PowMod(c, n / 3, kModulus) != 1 &&
        PowMod(c, n / kOrder, kModulus) != 1) {
      return c;
    }
  }
  throw Error("no primitive root");
}

uint32_t ScalarValue(const Scalar& s) { return s.bytes[0]; }

Scalar MakeScalar(uint32_t v) {
  Scalar s;
  s.bytes[0] = static_cast<uint8_t>(v);
  return s;
}

uint32_t ElementValue(const GroupElement& e) {
  return static_cast<uint32_t>(e.bytes[0]) |
         (static_cast<uint32_t>(e.bytes[1]) << 8);
}

GroupElement MakeElement(uint32_t v) {
  GroupElement e;
  e.bytes[0] = static_cast<uint8_t>(v & 0xff);
  e.bytes[1] = static_cast<uint8_t>(v >> 8);
  return e;
}

class ToyGroup final : public Group {
 public:
  ToyGroup()
      : Group(GroupDescription{BackendId::kToy, "101", 7, 16, 8}) {
    const uint32_t gen = PowMod(SmallestPrimitiveRoot(), 6, kModulus);
    powers_.resize(kOrder);
    uint32_t acc = 1;
    for (uint32_t i = 0; i < kOrder; ++i) {
      powers_[i] = acc;
      acc = acc * gen % kModulus;
    }
    InitElements(MakeElement(1), MakeElement(gen));
  }

 private:
  Scalar DoFromUint(uint64_t v) const override {
    return MakeScalar(static_cast<uint32_t>(v % kOrder));
  }
  Scalar DoSampleScalar(Rng& rng) const override {
    return MakeScalar(static_cast<uint32_t>(rng.Uniform(kOrder)));
  }
  Scalar DoAdd(const Scalar& a, const Scalar& b) const override {
    return MakeScalar((ScalarValue(a) + ScalarValue(b)) % kOrder);
  }
  Scalar DoSub(const Scalar& a, const Scalar& b) const override {
    return MakeScalar((ScalarValue(a) + kOrder - ScalarValue(b)) % kOrder);
  }
  Scalar DoMul(const Scalar& a, const Scalar& b) const override {
    return MakeScalar(ScalarValue(a) * ScalarValue(b) % kOrder);
  }
  bool DoIsCanonicalScalar(const Scalar& s) const override {
    for (size_t i = 1; i < s.bytes.size(); ++i) {
      if (s.bytes[i] != 0) return false;
    }
    return s.bytes[0] < kOrder;
  }

  GroupElement DoSampleElement(Rng& rng) const override {
    return MakeElement(powers_[rng.Uniform(kOrder)]);
  }
  GroupElement DoExp(const GroupElement& base,
                     const Scalar& e) const override {
    return MakeElement(PowMod(ElementValue(base), ScalarValue(e), kModulus));
  }
  GroupElement DoMul(const GroupElement& a,
                     const GroupElement& b) const override {
    return MakeElement(ElementValue(a) * ElementValue(b) % kModulus);
  }
  void DoEncodeElement(const GroupElement& e,
                       std::span<uint8_t> out) const override {
    uint32_t v = ElementValue(e);
    out[0] = static_cast<uint8_t>(v >> 8);
    out[1] = static_cast<uint8_t>(v & 0xff);
  }
  bool DoDecodeElement(std::span<const uint8_t> in,
                       GroupElement* out) const override {
    uint32_t v = (static_cast<uint32_t>(in[0]) << 8) | in[1];
    if (v == 0 || v >= kModulus || PowMod(v, kOrder, kModulus) != 1) {
      return false;
    }
    *out = MakeElement(v);
    return true;
  }

  std::vector<uint32_t> powers_;
};

}  // namespace

std::shared_ptr<const Group> MakeToyGroup() {
  static const auto kGroup = std::make_shared<const ToyGroup>();
  return kGroup;
}

}  // namespace mmvc
