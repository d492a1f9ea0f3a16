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

#include <sodium.h>

#include <algorithm>
#include <array>

#include "mmvc/algebra/group.h"
#include "mmvc/common/error.h"

namespace mmvc {
namespace {

static_assert(crypto_core_ristretto255_BYTES == 32);
static_assert(crypto_core_ristretto255_SCALARBYTES == 32);

// The all-zero encoding is the ristretto255 identity.
bool IsIdentity(const GroupElement& e) {
  return std::all_of(e.bytes.begin(), e.bytes.end(),
                     [](uint8_t b) { return b == 0; });
}

class RistrettoGroup final : public Group {
 public:
  RistrettoGroup()
      : Group(GroupDescription{
            BackendId::kProduction,
            "7237005577332262213973186563042994240857116359379907606001950938"
            "285454250989",
            253, 256, 256}) {
    EnsureSodium();
    Scalar one = DoFromUint(1);
    GroupElement base;
    if (crypto_scalarmult_ristretto255_base(base.bytes.data(),
                                            one.bytes.data()) != 0) {
      throw Error("ristretto255 base point unavailable");
    }
    InitElements(GroupElement{}, base);
  }

 private:
  Scalar DoFromUint(uint64_t v) const override {
    Scalar s;
    for (size_t i = 0; i < 8; ++i) {
      s.bytes[i] = static_cast<uint8_t>(v >> (8 * i));
    }
    return s;  // 2^64 < p, already reduced
  }
  Scalar DoSampleScalar(Rng& rng) const override {
    // Reducing 512 uniform bits mod p leaves a bias below 2^-250.
    std::array<uint8_t, crypto_core_ristretto255_NONREDUCEDSCALARBYTES> wide{};
    rng.Fill(wide);
    Scalar s;
    crypto_core_ristretto255_scalar_reduce(s.bytes.data(), wide.data());
    return s;
  }
  Scalar DoAdd(const Scalar& a, const Scalar& b) const override {
    Scalar s;
    crypto_core_ristretto255_scalar_add(s.bytes.data(), a.bytes.data(),
                                        b.bytes.data());
    return s;
  }
  Scalar DoSub(const Scalar& a, const Scalar& b) const override {
    Scalar s;
    crypto_core_ristretto255_scalar_sub(s.bytes.data(), a.bytes.data(),
                                        b.bytes.data());
    return s;
  }
  Scalar DoMul(const Scalar& a, const Scalar& b) const override {
    Scalar s;
    crypto_core_ristretto255_scalar_mul(s.bytes.data(), a.bytes.data(),
                                        b.bytes.data());
    return s;
  }
  bool DoIsCanonicalScalar(const Scalar& s) const override {
    std::array<uint8_t, crypto_core_ristretto255_NONREDUCEDSCALARBYTES> wide{};
    std::copy(s.bytes.begin(), s.bytes.end(), wide.begin());
    Scalar reduced;
    crypto_core_ristretto255_scalar_reduce(reduced.bytes.data(), wide.data());
    return reduced == s;
  }

  GroupElement DoSampleElement(Rng& rng) const override {
    std::array<uint8_t, crypto_core_ristretto255_HASHBYTES> h{};
    rng.Fill(h);
    GroupElement e;
    crypto_core_ristretto255_from_hash(e.bytes.data(), h.data());
    return e;
  }
  GroupElement DoExp(const GroupElement& base,
                     const Scalar& e) const override {
    GroupElement out;
    if (IsIdentity(base) || e == Scalar{}) {
      return out;
    }
    // libsodium refuses to output the identity; the only way to reach it
    // from a non-identity base is a zero exponent, handled above.
    if (crypto_scalarmult_ristretto255(out.bytes.data(), e.bytes.data(),
                                       base.bytes.data()) != 0) {
      return GroupElement{};
    }
    return out;
  }
  GroupElement DoMul(const GroupElement& a,
                     const GroupElement& b) const override {
    GroupElement out;
    if (crypto_core_ristretto255_add(out.bytes.data(), a.bytes.data(),
                                     b.bytes.data()) != 0) {
      throw Error("invalid element");
    }
    return out;
  }
  void DoEncodeElement(const GroupElement& e,
                       std::span<uint8_t> out) const override {
    std::copy(e.bytes.begin(), e.bytes.end(), out.begin());
  }
  bool DoDecodeElement(std::span<const uint8_t> in,
                       GroupElement* out) const override {
    if (crypto_core_ristretto255_is_valid_point(in.data()) != 1) {
      return false;
    }
    std::copy(in.begin(), in.end(), out->bytes.begin());
    return true;
  }
};

}  // namespace

std::shared_ptr<const Group> MakeProductionGroup() {
  static const auto kGroup = std::make_shared<const RistrettoGroup>();
  return kGroup;
}

}  // namespace mmvc
