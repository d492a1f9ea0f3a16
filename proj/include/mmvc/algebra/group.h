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

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mmvc/algebra/counters.h"
#include "mmvc/algebra/rng.h"
#include "mmvc/common/error.h"

namespace mmvc {

enum class BackendId : uint8_t {
  kProduction = 1,  // ristretto255, order 2^252 + 27742317777372353535851937790883648493
  kToy = 2,         // order-101 subgroup of (Z/607Z)^*
};

std::string_view BackendName(BackendId id);
BackendId ParseBackend(std::string_view name);

struct GroupDescription {
  BackendId backend;
  std::string order_decimal;      // p
  size_t order_bits;
  size_t element_encoding_bits;   // l_G
  size_t scalar_encoding_bits;    // l_p

  size_t element_bytes() const { return (element_encoding_bits + 7) / 8; }
  size_t scalar_bytes() const { return (scalar_encoding_bits + 7) / 8; }
};

// Element of Z_p, stored little-endian and always reduced mod p. Only the
// Group that produced it knows how to interpret the bytes.
struct Scalar {
  std::array<uint8_t, 32> bytes{};
  friend bool operator==(const Scalar&, const Scalar&) = default;
};

// Canonical backend representation of an element of the order-p group.
// Equal elements have equal bytes.
struct GroupElement {
  std::array<uint8_t, 32> bytes{};
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Prime-order cyclic group together with its scalar field.
//
// Counted operations (Add, Sub, Mul, Exp, Mul on elements, MultiExp,
// SampleScalar, SampleElement) report to the active CounterScope using the
// abstract cost model: MultiExp over n terms counts n exponentiations and
// n - 1 multiplications whatever the internal algorithm. Conversions,
// encodings and comparisons are free.
//
// Instances are immutable and safe to share between threads.
class Group {
 public:
  virtual ~Group() = default;

  const GroupDescription& description() const { return desc_; }
  BackendId backend() const { return desc_.backend; }
  size_t scalar_bytes() const { return desc_.scalar_bytes(); }
  size_t element_bytes() const { return desc_.element_bytes(); }

  // Scalar field.
  Scalar Zero() const { return Scalar{}; }
  Scalar One() const { return FromUint(1); }
  Scalar FromUint(uint64_t v) const;
  Scalar SampleScalar(Rng& rng) const;
  Scalar Add(const Scalar& a, const Scalar& b) const;
  Scalar Sub(const Scalar& a, const Scalar& b) const;
  Scalar Mul(const Scalar& a, const Scalar& b) const;
  bool IsZero(const Scalar& a) const { return a == Scalar{}; }

  // Group.
  GroupElement Identity() const { return identity_; }
  // Fixed generator of the backend, used to map scalars to elements.
  GroupElement Generator() const { return generator_; }
  GroupElement SampleElement(Rng& rng) const;
  // Uniform non-identity element; part of choosing a group description and
  // therefore not counted.
  GroupElement RandomGenerator(Rng& rng) const;
  GroupElement Exp(const GroupElement& base, const Scalar& e) const;
  GroupElement Mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement MultiExp(std::span<const GroupElement> bases,
                        std::span<const Scalar> exps) const;

  // Canonical encodings: scalars as fixed-width big-endian integers,
  // elements as fixed-width backend encodings.
  void EncodeScalar(const Scalar& s, std::span<uint8_t> out) const;
  Scalar DecodeScalar(std::span<const uint8_t> in) const;
  void EncodeElement(const GroupElement& e, std::span<uint8_t> out) const;
  GroupElement DecodeElement(std::span<const uint8_t> in) const;
  bool IsValidElementEncoding(std::span<const uint8_t> in) const;

  std::string ScalarToString(const Scalar& s) const;
  // Accepts a decimal integer (reduced mod p) or a 0x-prefixed big-endian
  // hex integer (must already be < p).
  Scalar ParseScalar(std::string_view text) const;

 protected:
  explicit Group(GroupDescription desc) : desc_(std::move(desc)) {}
  // Called by subclasses once their state is ready.
  void InitElements(GroupElement identity, GroupElement generator) {
    identity_ = identity;
    generator_ = generator;
  }

 private:
  virtual Scalar DoFromUint(uint64_t v) const = 0;
  virtual Scalar DoSampleScalar(Rng& rng) const = 0;
  virtual Scalar DoAdd(const Scalar& a, const Scalar& b) const = 0;
  virtual Scalar DoSub(const Scalar& a, const Scalar& b) const = 0;
  virtual Scalar DoMul(const Scalar& a, const Scalar& b) const = 0;
  virtual bool DoIsCanonicalScalar(const Scalar& s) const = 0;

  virtual GroupElement DoSampleElement(Rng& rng) const = 0;
  virtual GroupElement DoExp(const GroupElement& base,
                             const Scalar& e) const = 0;
  virtual GroupElement DoMul(const GroupElement& a,
                             const GroupElement& b) const = 0;
  virtual void DoEncodeElement(const GroupElement& e,
                               std::span<uint8_t> out) const = 0;
  virtual bool DoDecodeElement(std::span<const uint8_t> in,
                               GroupElement* out) const = 0;

  GroupDescription desc_;
  GroupElement identity_;
  GroupElement generator_;
};

std::shared_ptr<const Group> MakeGroup(BackendId id);
std::shared_ptr<const Group> MakeToyGroup();
std::shared_ptr<const Group> MakeProductionGroup();

// Convenience: y = sum_i a_i * b_i, counted as n multiplications and n - 1
// additions.
Scalar InnerProduct(const Group& group, std::span<const Scalar> a,
                    std::span<const Scalar> b);

}  // namespace mmvc
