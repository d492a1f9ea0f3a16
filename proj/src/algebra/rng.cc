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

#include "mmvc/algebra/rng.h"

#include <sodium.h>

#include <algorithm>
#include <cstring>
#include <mutex>

#include "mmvc/common/error.h"

namespace mmvc {

void EnsureSodium() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    if (sodium_init() < 0) {
      throw Error("libsodium initialisation failed");
    }
  });
}

Rng::Rng(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {
  EnsureSodium();
  std::array<uint8_t, 8> seed_bytes{};
  for (size_t i = 0; i < 8; ++i) {
    seed_bytes[i] = static_cast<uint8_t>(seed >> (8 * i));
  }
  static constexpr char kDomain[] = "mmvc.rng.v1";
  crypto_generichash_state st;
  crypto_generichash_init(&st, nullptr, 0, key_.size());
  crypto_generichash_update(&st, reinterpret_cast<const uint8_t*>(kDomain),
                            sizeof(kDomain) - 1);
  crypto_generichash_update(&st, seed_bytes.data(), seed_bytes.size());
  crypto_generichash_final(&st, key_.data(), key_.size());
}

void Rng::Refill() {
  std::array<uint8_t, crypto_stream_chacha20_ietf_NONCEBYTES> nonce{};
  for (size_t i = 0; i < 8; ++i) {
    nonce[i] = static_cast<uint8_t>(stream_ >> (8 * i));
  }
  buf_.fill(0);
  crypto_stream_chacha20_ietf_xor_ic(buf_.data(), buf_.data(), buf_.size(),
                                     nonce.data(), block_, key_.data());
  ++block_;
  MMVC_ENFORCE(block_ != 0, "rng stream exhausted");
  pos_ = 0;
}

void Rng::Fill(std::span<uint8_t> out) {
  size_t done = 0;
  while (done < out.size()) {
    if (pos_ == buf_.size()) {
      Refill();
    }
    size_t n = std::min(out.size() - done, buf_.size() - pos_);
    std::memcpy(out.data() + done, buf_.data() + pos_, n);
    pos_ += n;
    done += n;
  }
}

uint64_t Rng::NextU64() {
  std::array<uint8_t, 8> b{};
  Fill(b);
  uint64_t v = 0;
  for (size_t i = 0; i < 8; ++i) {
    v |= static_cast<uint64_t>(b[i]) << (8 * i);
  }
  return v;
}

uint64_t Rng::Uniform(uint64_t bound) {
  MMVC_ENFORCE(bound != 0, "empty range");
  // Rejection sampling: accept only below the largest multiple of bound.
  const uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  uint64_t v;
  do {
    v = NextU64();
  } while (v > limit);
  return v % bound;
}

Rng Rng::Fork(uint64_t stream) const {
  // Mix the parent stream in so that forks of forks stay distinct.
  return Rng(seed_, stream_ * 0x9E3779B97F4A7C15ULL + stream + 1);
}

}  // namespace mmvc
