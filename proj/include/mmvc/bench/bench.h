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
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <memory>
#include <string_view>
#include <vector>

#include "mmvc/algebra/counters.h"
#include "mmvc/algebra/group.h"
#include "mmvc/common/error.h"
#include "mmvc/wire/size_report.h"

namespace mmvc::bench {

using wire::Workload;

enum class Scheme { kMmvc, kFg12 };
enum class SchemeChoice { kMmvc, kFg12, kBoth };
enum class Phase { kSetup, kKeyGen, kProbGen, kCompute, kVerify };

inline constexpr size_t kPhaseCount = 5;
inline constexpr std::array<Phase, kPhaseCount> kAllPhases = {
    Phase::kSetup, Phase::kKeyGen, Phase::kProbGen, Phase::kCompute,
    Phase::kVerify};

std::string_view SchemeName(Scheme s);
std::string_view PhaseName(Phase p);
SchemeChoice ParseSchemeChoice(std::string_view name);

using PhaseCounters = std::array<OpCounters, kPhaseCount>;

// Expected operation counts for a functions and b inputs:
//
//            rng      add_p       mul_p   mul_G       exp_G
//   Setup    d        0           0       0           0
//   KeyGen   a(m+1)   a(m-1)d     amd     ad          2ad      (mmvc)
//            2am      0           amd     amd         2amd     (fg12)
//   ProbGen  0        0           0       b(d-1)      bd
//   Compute  0        abm(d-1)    abmd    ab(d-1)     abd      (mmvc)
//            0        abm(d-1)    abmd    abm(d-1)    abmd     (fg12)
//   Verify   0        ab(m-1)     abm     ab          2ab      (mmvc)
//            0        0           abm     abm         2abm     (fg12)
PhaseCounters ExpectedCounters(Scheme scheme, const Workload& w);

struct CounterMismatch {
  Scheme scheme;
  Phase phase;
  std::string column;
  uint64_t expected;
  uint64_t actual;

  std::string ToString() const;
};

std::vector<CounterMismatch> CompareCounters(Scheme scheme, const Workload& w,
                                             const PhaseCounters& actual);

class CounterMismatchError : public Error {
 public:
  explicit CounterMismatchError(std::vector<CounterMismatch> mismatches);
  const std::vector<CounterMismatch>& mismatches() const { return mismatches_; }

 private:
  std::vector<CounterMismatch> mismatches_;
};

struct BenchConfig {
  Workload dims;
  BackendId backend = BackendId::kToy;
  size_t repetitions = 3;
  SchemeChoice scheme = SchemeChoice::kBoth;
  uint64_t seed = 1;
  // Distribute the (F_i, x_j) Compute tasks over worker threads.
  bool parallel = false;
  bool warmup = true;
  bool check_counters = true;
};

struct SchemeResult {
  PhaseCounters counters;
  // Per repetition, per phase wall time in seconds.
  std::vector<std::array<double, kPhaseCount>> seconds;

  // Medians over repetitions of KeyGen + ProbGen + Verify and of Compute.
  double client_seconds() const;
  double server_seconds() const;
  double phase_seconds(Phase p) const;
};

struct BenchReport {
  BenchConfig config;
  std::optional<SchemeResult> mmvc;
  std::optional<SchemeResult> fg12;
  wire::SizeReport sizes;

  // t_c^2 / t_c^1 and t_s^2 / t_s^1; NaN unless both schemes ran.
  double client_ratio() const;
  double server_ratio() const;
};

// Runs the full a x b workload (Setup, a KeyGen, b ProbGen, ab Compute,
// ab Verify) per selected scheme. Every response must verify to F_i x_j.
// Counters are checked against ExpectedCounters unless disabled; a mismatch
// throws CounterMismatchError naming the offending cells.
BenchReport RunBench(const BenchConfig& cfg);

// Instrumented single pass for one scheme, without timing repetitions.
PhaseCounters CountOperations(Scheme scheme, const Workload& w,
                              std::shared_ptr<const Group> group,
                              uint64_t seed);

void WriteBenchCsvHeader(std::ostream& os);
void WriteBenchCsvRow(std::ostream& os, std::string_view param,
                      uint64_t value, const BenchReport& report);

}  // namespace mmvc::bench
