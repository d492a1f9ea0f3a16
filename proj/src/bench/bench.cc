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

#include "mmvc/bench/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>

#include "mmvc/scheme/fg12.h"
#include "mmvc/scheme/mmvc.h"

namespace mmvc::bench {
namespace {

using Clock = std::chrono::steady_clock;

size_t Index(Phase p) { return static_cast<size_t>(p); }

double Median(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct Instance {
  std::vector<Matrix> fs;
  std::vector<std::vector<Scalar>> xs;
  std::vector<std::vector<std::vector<Scalar>>> expected;  // [i][j] = F_i x_j
};

Instance MakeInstance(const Group& group, const Workload& w, uint64_t seed) {
  CounterPause pause;
  Rng rng(seed, /*stream=*/0x5eed);
  Instance inst;
  for (uint64_t i = 0; i < w.a; ++i) {
    inst.fs.push_back(Matrix::Random(group, w.m, w.d, rng));
  }
  for (uint64_t j = 0; j < w.b; ++j) {
    inst.xs.push_back(RandomVector(group, w.d, rng));
  }
  for (const auto& f : inst.fs) {
    auto& row = inst.expected.emplace_back();
    for (const auto& x : inst.xs) row.push_back(MatrixVector(group, f, x));
  }
  return inst;
}

// Runs body(task) for task in [0, n) on up to hardware_concurrency threads.
// Counts recorded on workers are merged into the caller's current scope.
void ParallelFor(size_t n, CounterScope& scope,
                 const std::function<void(size_t)>& body) {
  const size_t threads = std::max<size_t>(
      1, std::min<size_t>(n, std::thread::hardware_concurrency()));
  std::vector<OpCounters> counts(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      CounterScope local("worker");
      try {
        for (size_t t = w; t < n; t += threads) body(t);
      } catch (...) {
        errors[w] = std::current_exception();
      }
      counts[w] = local.counters();
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const auto& c : counts) scope.Merge(c);
}

// Times a phase and captures its operation counts.
template <typename Fn>
void RunPhase(Phase phase, PhaseCounters& counters,
              std::array<double, kPhaseCount>& seconds, Fn&& fn) {
  CounterScope scope(std::string(PhaseName(phase)));
  const auto start = Clock::now();
  fn(scope);
  seconds[Index(phase)] =
      std::chrono::duration<double>(Clock::now() - start).count();
  counters[Index(phase)] = scope.counters();
}

void RequireVerified(bool ok) {
  MMVC_ENFORCE(ok, "benchmark response failed to verify");
}

struct PassResult {
  PhaseCounters counters;
  std::array<double, kPhaseCount> seconds{};
};

PassResult RunMmvcPass(const Workload& w, std::shared_ptr<const Group> group,
                       const Instance& inst, Rng& rng, bool parallel) {
  PassResult out;
  const Group& g = *group;
  PublicParams pk;
  std::vector<KeyPair> keys;
  std::vector<InputEncoding> encs;
  std::vector<ServerResponse> resps(w.a * w.b);

  RunPhase(Phase::kSetup, out.counters, out.seconds,
           [&](CounterScope&) { pk = Setup(group, w.d, rng); });
  RunPhase(Phase::kKeyGen, out.counters, out.seconds, [&](CounterScope&) {
    for (const auto& f : inst.fs) keys.push_back(KeyGen(pk, f, rng));
  });
  RunPhase(Phase::kProbGen, out.counters, out.seconds, [&](CounterScope&) {
    for (const auto& x : inst.xs) encs.push_back(ProbGen(pk, x));
  });
  RunPhase(Phase::kCompute, out.counters, out.seconds, [&](CounterScope& s) {
    auto task = [&](size_t t) {
      resps[t] = Compute(g, keys[t / w.b].ek, encs[t % w.b].x);
    };
    if (parallel) {
      ParallelFor(resps.size(), s, task);
    } else {
      for (size_t t = 0; t < resps.size(); ++t) task(t);
    }
  });
  bool ok = true;
  RunPhase(Phase::kVerify, out.counters, out.seconds, [&](CounterScope&) {
    for (size_t t = 0; t < resps.size(); ++t) {
      const size_t i = t / w.b, j = t % w.b;
      auto y = Verify(pk, keys[i].vk, encs[j].vk_x, resps[t]);
      ok = ok && y && *y == inst.expected[i][j];
    }
  });
  RequireVerified(ok);
  return out;
}

PassResult RunFg12Pass(const Workload& w, std::shared_ptr<const Group> group,
                       const Instance& inst, Rng& rng, bool parallel) {
  PassResult out;
  const Group& g = *group;
  PublicParams pk;
  std::vector<fg12::MatrixKeys> keys;
  std::vector<InputEncoding> encs;
  std::vector<std::vector<fg12::Response>> resps(w.a * w.b);

  RunPhase(Phase::kSetup, out.counters, out.seconds,
           [&](CounterScope&) { pk = Setup(group, w.d, rng); });
  RunPhase(Phase::kKeyGen, out.counters, out.seconds, [&](CounterScope&) {
    for (const auto& f : inst.fs) keys.push_back(fg12::MatrixKeyGen(pk, f, rng));
  });
  RunPhase(Phase::kProbGen, out.counters, out.seconds, [&](CounterScope&) {
    for (const auto& x : inst.xs) encs.push_back(ProbGen(pk, x));
  });
  RunPhase(Phase::kCompute, out.counters, out.seconds, [&](CounterScope& s) {
    auto task = [&](size_t t) {
      resps[t] = fg12::MatrixCompute(g, keys[t / w.b].eks, encs[t % w.b].x);
    };
    if (parallel) {
      ParallelFor(resps.size(), s, task);
    } else {
      for (size_t t = 0; t < resps.size(); ++t) task(t);
    }
  });
  bool ok = true;
  RunPhase(Phase::kVerify, out.counters, out.seconds, [&](CounterScope&) {
    for (size_t t = 0; t < resps.size(); ++t) {
      const size_t i = t / w.b, j = t % w.b;
      auto y = fg12::MatrixVerify(pk, keys[i].vks, encs[j].vk_x, resps[t]);
      ok = ok && y && *y == inst.expected[i][j];
    }
  });
  RequireVerified(ok);
  return out;
}

PassResult RunPass(Scheme scheme, const Workload& w,
                   std::shared_ptr<const Group> group, const Instance& inst,
                   Rng& rng, bool parallel) {
  return scheme == Scheme::kMmvc
             ? RunMmvcPass(w, std::move(group), inst, rng, parallel)
             : RunFg12Pass(w, std::move(group), inst, rng, parallel);
}

void Check(Scheme scheme, const Workload& w, const PhaseCounters& c) {
  auto mismatches = CompareCounters(scheme, w, c);
  if (!mismatches.empty()) throw CounterMismatchError(std::move(mismatches));
}

SchemeResult RunScheme(Scheme scheme, const BenchConfig& cfg,
                       std::shared_ptr<const Group> group,
                       const Instance& inst) {
  const uint64_t stream = scheme == Scheme::kMmvc ? 1 : 2;
  SchemeResult result;
  if (cfg.warmup) {
    Rng rng(cfg.seed, 100 + stream);
    RunPass(scheme, cfg.dims, group, inst, rng, cfg.parallel);
  }
  const size_t reps = std::max<size_t>(1, cfg.repetitions);
  for (size_t rep = 0; rep < reps; ++rep) {
    Rng rng(cfg.seed, 1000 * (rep + 1) + stream);
    PassResult pass = RunPass(scheme, cfg.dims, group, inst, rng, cfg.parallel);
    if (cfg.check_counters) Check(scheme, cfg.dims, pass.counters);
    if (rep == 0) {
      result.counters = pass.counters;
    } else {
      MMVC_ENFORCE(pass.counters == result.counters,
                   "operation counts differ between repetitions");
    }
    result.seconds.push_back(pass.seconds);
  }
  return result;
}

}  // namespace

std::string_view SchemeName(Scheme s) {
  return s == Scheme::kMmvc ? "mmvc" : "fg12";
}

std::string_view PhaseName(Phase p) {
  switch (p) {
    case Phase::kSetup:
      return "Setup";
    case Phase::kKeyGen:
      return "KeyGen";
    case Phase::kProbGen:
      return "ProbGen";
    case Phase::kCompute:
      return "Compute";
    case Phase::kVerify:
      return "Verify";
  }
  return "?";
}

SchemeChoice ParseSchemeChoice(std::string_view name) {
  if (name == "mmvc") return SchemeChoice::kMmvc;
  if (name == "fg12") return SchemeChoice::kFg12;
  if (name == "both") return SchemeChoice::kBoth;
  throw Error("unknown scheme: " + std::string(name));
}

PhaseCounters ExpectedCounters(Scheme scheme, const Workload& w) {
  const uint64_t a = w.a, b = w.b, m = w.m, d = w.d;
  PhaseCounters c{};
  c[Index(Phase::kSetup)] = {d, 0, 0, 0, 0};
  c[Index(Phase::kProbGen)] = {0, 0, 0, b * (d - 1), b * d};
  if (scheme == Scheme::kMmvc) {
    c[Index(Phase::kKeyGen)] = {a * (m + 1), a * (m - 1) * d, a * m * d,
                                a * d, 2 * a * d};
    c[Index(Phase::kCompute)] = {0, a * b * m * (d - 1), a * b * m * d,
                                 a * b * (d - 1), a * b * d};
    c[Index(Phase::kVerify)] = {0, a * b * (m - 1), a * b * m, a * b,
                                2 * a * b};
  } else {
    c[Index(Phase::kKeyGen)] = {2 * a * m, 0, a * m * d, a * m * d,
                                2 * a * m * d};
    c[Index(Phase::kCompute)] = {0, a * b * m * (d - 1), a * b * m * d,
                                 a * b * m * (d - 1), a * b * m * d};
    c[Index(Phase::kVerify)] = {0, 0, a * b * m, a * b * m, 2 * a * b * m};
  }
  return c;
}

std::string CounterMismatch::ToString() const {
  std::ostringstream os;
  os << SchemeName(scheme) << " " << PhaseName(phase) << "." << column
     << ": expected " << expected << ", counted " << actual;
  return os.str();
}

std::vector<CounterMismatch> CompareCounters(Scheme scheme, const Workload& w,
                                             const PhaseCounters& actual) {
  const PhaseCounters expected = ExpectedCounters(scheme, w);
  std::vector<CounterMismatch> out;
  for (Phase p : kAllPhases) {
    const OpCounters& e = expected[Index(p)];
    const OpCounters& a = actual[Index(p)];
    const std::array<std::tuple<const char*, uint64_t, uint64_t>, 5> cells = {{
        {"rng", e.rng, a.rng},
        {"add_p", e.add_p, a.add_p},
        {"mul_p", e.mul_p, a.mul_p},
        {"mul_G", e.mul_g, a.mul_g},
        {"exp_G", e.exp_g, a.exp_g},
    }};
    for (const auto& [name, want, got] : cells) {
      if (want != got) out.push_back({scheme, p, name, want, got});
    }
  }
  return out;
}

CounterMismatchError::CounterMismatchError(
    std::vector<CounterMismatch> mismatches)
    : Error([&] {
        std::string msg = "operation counts differ from the cost table:";
        for (const auto& m : mismatches) msg += "\n  " + m.ToString();
        return msg;
      }()),
      mismatches_(std::move(mismatches)) {}

double SchemeResult::phase_seconds(Phase p) const {
  std::vector<double> v;
  for (const auto& rep : seconds) v.push_back(rep[Index(p)]);
  return Median(std::move(v));
}

double SchemeResult::client_seconds() const {
  std::vector<double> v;
  for (const auto& rep : seconds) {
    v.push_back(rep[Index(Phase::kKeyGen)] + rep[Index(Phase::kProbGen)] +
                rep[Index(Phase::kVerify)]);
  }
  return Median(std::move(v));
}

double SchemeResult::server_seconds() const {
  return phase_seconds(Phase::kCompute);
}

double BenchReport::client_ratio() const {
  if (!mmvc || !fg12) return std::numeric_limits<double>::quiet_NaN();
  return fg12->client_seconds() / mmvc->client_seconds();
}

double BenchReport::server_ratio() const {
  if (!mmvc || !fg12) return std::numeric_limits<double>::quiet_NaN();
  return fg12->server_seconds() / mmvc->server_seconds();
}

BenchReport RunBench(const BenchConfig& cfg) {
  const Workload& w = cfg.dims;
  MMVC_ENFORCE(w.a >= 1 && w.b >= 1 && w.m >= 1 && w.d >= 1,
               "workload dimensions must be positive");
  auto group = MakeGroup(cfg.backend);
  const Instance inst = MakeInstance(*group, w, cfg.seed);

  BenchReport report{cfg, std::nullopt, std::nullopt,
                     wire::ComputeSizeReport(w, *group)};
  if (cfg.scheme != SchemeChoice::kFg12) {
    report.mmvc = RunScheme(Scheme::kMmvc, cfg, group, inst);
  }
  if (cfg.scheme != SchemeChoice::kMmvc) {
    report.fg12 = RunScheme(Scheme::kFg12, cfg, group, inst);
  }
  return report;
}

PhaseCounters CountOperations(Scheme scheme, const Workload& w,
                              std::shared_ptr<const Group> group,
                              uint64_t seed) {
  const Instance inst = MakeInstance(*group, w, seed);
  Rng rng(seed, 7);
  return RunPass(scheme, w, std::move(group), inst, rng, false).counters;
}

void WriteBenchCsvHeader(std::ostream& os) {
  os << "param,value,a,b,m,d,t_c1,t_c2,t_s1,t_s2,t_c2_over_t_c1,"
        "t_s2_over_t_s1,c1_bytes,c2_bytes,s1_bytes,s2_bytes\n";
}

void WriteBenchCsvRow(std::ostream& os, std::string_view param,
                      uint64_t value, const BenchReport& r) {
  const auto& w = r.config.dims;
  auto time = [](const std::optional<SchemeResult>& s, bool client) {
    if (!s) return std::numeric_limits<double>::quiet_NaN();
    return client ? s->client_seconds() : s->server_seconds();
  };
  std::ostringstream line;
  line << std::setprecision(6);
  line << param << "," << value << "," << w.a << "," << w.b << "," << w.m
       << "," << w.d << "," << time(r.mmvc, true) << ","
       << time(r.fg12, true) << "," << time(r.mmvc, false) << ","
       << time(r.fg12, false) << "," << r.client_ratio() << ","
       << r.server_ratio() << "," << r.sizes.mmvc.communication_bits() / 8
       << "," << r.sizes.fg12.communication_bits() / 8 << ","
       << r.sizes.mmvc.storage_bits() / 8 << ","
       << r.sizes.fg12.storage_bits() / 8 << "\n";
  os << line.str();
}

}  // namespace mmvc::bench
