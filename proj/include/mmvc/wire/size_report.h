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

#include "mmvc/algebra/group.h"

namespace mmvc::wire {

// a functions F_1..F_a in Z_p^{m x d}, b inputs x_1..x_b.
struct Workload {
  uint64_t a = 1;
  uint64_t b = 1;
  uint64_t m = 1;
  uint64_t d = 1;

  friend bool operator==(const Workload&, const Workload&) = default;
};

// Bits of every object one scheme sends (EK_F, sigma_x, sigma_y) or the
// client stores (VK_F, VK_x) over a whole workload.
struct SchemeSizes {
  uint64_t ek_bits = 0;
  uint64_t enc_bits = 0;
  uint64_t resp_bits = 0;
  uint64_t vkf_bits = 0;
  uint64_t vkx_bits = 0;

  uint64_t communication_bits() const { return ek_bits + enc_bits + resp_bits; }
  uint64_t storage_bits() const { return vkf_bits + vkx_bits; }

  friend bool operator==(const SchemeSizes&, const SchemeSizes&) = default;
};

inline constexpr double kBitsPerKiB = 8.0 * 1024.0;
inline constexpr double kBitsPerMiB = 8.0 * 1024.0 * 1024.0;

struct SizeReport {
  Workload dims;
  uint64_t scalar_bits;   // l_p
  uint64_t element_bits;  // l_G
  SchemeSizes mmvc;       // c^1, s^1
  SchemeSizes fg12;       // c^2, s^2

  double c1_mib() const { return mmvc.communication_bits() / kBitsPerMiB; }
  double c2_mib() const { return fg12.communication_bits() / kBitsPerMiB; }
  double s1_kib() const { return mmvc.storage_bits() / kBitsPerKiB; }
  double s2_kib() const { return fg12.storage_bits() / kBitsPerKiB; }
};

// Closed forms:
//   c^1 = (amd + bd + abm) l_p + (ad + ab) l_G
//   c^2 = (amd + bd + abm) l_p + (amd + abm) l_G
//   s^1 = a(m + 1) l_p + b l_G
//   s^2 = 2am l_p + b l_G
SizeReport ComputeSizeReport(const Workload& w, uint64_t scalar_bits,
                             uint64_t element_bits);

// Same report with l_p, l_G taken from the backend encodings.
SizeReport ComputeSizeReport(const Workload& w, const Group& group);

// Runs both schemes over a random workload, serialises every object with
// the wire codec and sums the scalar/element bytes actually emitted.
struct MeasuredSizes {
  SchemeSizes mmvc;
  SchemeSizes fg12;
};
MeasuredSizes MeasureSizes(const Workload& w,
                           std::shared_ptr<const Group> group, Rng& rng);

}  // namespace mmvc::wire
