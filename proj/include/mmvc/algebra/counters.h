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
#include <ostream>
#include <string>
#include <string_view>

namespace mmvc {

// Abstract operation counts in the cost model of the scheme analysis:
// random draws, field additions/multiplications, group multiplications and
// group exponentiations.
struct OpCounters {
  uint64_t rng = 0;
  uint64_t add_p = 0;
  uint64_t mul_p = 0;
  uint64_t mul_g = 0;
  uint64_t exp_g = 0;

  OpCounters& operator+=(const OpCounters& o) {
    rng += o.rng;
    add_p += o.add_p;
    mul_p += o.mul_p;
    mul_g += o.mul_g;
    exp_g += o.exp_g;
    return *this;
  }
  friend OpCounters operator+(OpCounters a, const OpCounters& b) {
    return a += b;
  }
  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

std::ostream& operator<<(std::ostream& os, const OpCounters& c);

enum class Op { kRng, kAddP, kMulP, kMulG, kExpG };

// Collects every counted operation executed on this thread while it is
// alive. Scopes nest additively: an operation is recorded in the innermost
// scope and in all of its enclosing scopes. A scope belongs to the thread
// that created it; work done on other threads must be merged explicitly.
class CounterScope {
 public:
  explicit CounterScope(std::string label = {});
  ~CounterScope();

  CounterScope(const CounterScope&) = delete;
  CounterScope& operator=(const CounterScope&) = delete;

  const OpCounters& counters() const { return counters_; }
  std::string_view label() const { return label_; }

  // Adds counts gathered elsewhere (e.g. by a worker thread) to this scope
  // and every enclosing one.
  void Merge(const OpCounters& other);

 private:
  friend void RecordOp(Op op, uint64_t n);

  std::string label_;
  OpCounters counters_;
  CounterScope* parent_;
};

// Suspends counting on this thread while alive. Used for work that lies
// outside the cost model, such as choosing the group description.
class CounterPause {
 public:
  CounterPause();
  ~CounterPause();

  CounterPause(const CounterPause&) = delete;
  CounterPause& operator=(const CounterPause&) = delete;
};

void RecordOp(Op op, uint64_t n = 1);

}  // namespace mmvc
