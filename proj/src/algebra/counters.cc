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

#include "mmvc/algebra/counters.h"

namespace mmvc {
namespace {

thread_local CounterScope* tls_current = nullptr;
thread_local int tls_paused = 0;

void Bump(OpCounters& c, Op op, uint64_t n) {
  switch (op) {
    case Op::kRng:
      c.rng += n;
      break;
    case Op::kAddP:
      c.add_p += n;
      break;
    case Op::kMulP:
      c.mul_p += n;
      break;
    case Op::kMulG:
      c.mul_g += n;
      break;
    case Op::kExpG:
      c.exp_g += n;
      break;
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const OpCounters& c) {
  return os << "{rng=" << c.rng << ", add_p=" << c.add_p
            << ", mul_p=" << c.mul_p << ", mul_G=" << c.mul_g
            << ", exp_G=" << c.exp_g << "}";
}

CounterScope::CounterScope(std::string label)
    : label_(std::move(label)), parent_(tls_current) {
  tls_current = this;
}

CounterScope::~CounterScope() { tls_current = parent_; }

void CounterScope::Merge(const OpCounters& other) {
  for (CounterScope* s = this; s != nullptr; s = s->parent_) {
    s->counters_ += other;
  }
}

CounterPause::CounterPause() { ++tls_paused; }
CounterPause::~CounterPause() { --tls_paused; }

void RecordOp(Op op, uint64_t n) {
  if (tls_paused > 0 || n == 0) {
    return;
  }
  for (CounterScope* s = tls_current; s != nullptr; s = s->parent_) {
    Bump(s->counters_, op, n);
  }
}

}  // namespace mmvc
