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
#include <span>

namespace mmvc {

// Deterministic, seedable randomness source (ChaCha20 keystream keyed by a
// hash of the seed). Every random draw in the library goes through an Rng
// passed by the caller; there is no ambient global generator.
class Rng {
 public:
  explicit Rng(uint64_t seed, uint64_t stream = 0);

  void Fill(std::span<uint8_t> out);
  uint64_t NextU64();

  // Uniform in [0, bound). bound must be non-zero.
  uint64_t Uniform(uint64_t bound);

  // Independent generator for the given stream id, derived from this seed.
  // Used to give each concurrent task its own reproducible stream.
  Rng Fork(uint64_t stream) const;

  uint64_t seed() const { return seed_; }

 private:
  void Refill();

  uint64_t seed_;
  uint64_t stream_;
  std::array<uint8_t, 32> key_{};
  uint32_t block_ = 0;
  std::array<uint8_t, 64> buf_{};
  size_t pos_ = 64;
};

// libsodium must be initialised before any primitive is used. Safe to call
// repeatedly and from several threads.
void EnsureSodium();

}  // namespace mmvc
