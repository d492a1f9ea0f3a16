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

#include "mmvc/bench/figures.h"

#include <chrono>
#include <fstream>
#include <iomanip>

#include "mmvc/common/error.h"
#include "mmvc/wire/size_report.h"

namespace mmvc::bench {
namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double TimePerOp(size_t iterations, Fn&& fn) {
  const auto start = Clock::now();
  for (size_t i = 0; i < iterations; ++i) fn(i);
  const double total =
      std::chrono::duration<double>(Clock::now() - start).count();
  return total / static_cast<double>(iterations);
}

double PhaseSum(const PhaseCounters& c, const UnitCosts& costs,
                std::initializer_list<Phase> phases) {
  double t = 0;
  for (Phase p : phases) t += costs.Apply(c[static_cast<size_t>(p)]);
  return t;
}

std::string_view Unit(Figure f) {
  switch (f) {
    case Figure::kClientTime:
    case Figure::kServerTime:
      return "seconds";
    case Figure::kCommunication:
      return "MiB";
    case Figure::kStorage:
      return "KiB";
  }
  return "?";
}

double Value(Figure f, Scheme s, const Workload& w, const FigureGrid& grid,
             const UnitCosts& costs) {
  switch (f) {
    case Figure::kClientTime:
      return ModelClientSeconds(s, w, costs);
    case Figure::kServerTime:
      return ModelServerSeconds(s, w, costs);
    case Figure::kCommunication:
    case Figure::kStorage: {
      const auto r =
          wire::ComputeSizeReport(w, grid.scalar_bits, grid.element_bits);
      if (f == Figure::kCommunication) {
        return s == Scheme::kMmvc ? r.c1_mib() : r.c2_mib();
      }
      return s == Scheme::kMmvc ? r.s1_kib() : r.s2_kib();
    }
  }
  return 0;
}

}  // namespace

double UnitCosts::Apply(const OpCounters& c) const {
  return rng * c.rng + add_p * c.add_p + mul_p * c.mul_p + mul_g * c.mul_g +
         exp_g * c.exp_g;
}

UnitCosts MeasureUnitCosts(const Group& group, Rng& rng, size_t iterations) {
  MMVC_ENFORCE(iterations > 0, "iterations must be positive");
  CounterPause pause;
  std::vector<Scalar> s;
  std::vector<GroupElement> e;
  for (size_t i = 0; i < iterations + 1; ++i) {
    s.push_back(group.SampleScalar(rng));
    e.push_back(group.SampleElement(rng));
  }
  UnitCosts c;
  Scalar acc = group.One();
  GroupElement eacc = group.Identity();
  c.rng = TimePerOp(iterations, [&](size_t) { acc = group.SampleScalar(rng); });
  c.add_p = TimePerOp(iterations,
                      [&](size_t i) { acc = group.Add(acc, s[i]); });
  c.mul_p = TimePerOp(iterations,
                      [&](size_t i) { acc = group.Mul(acc, s[i + 1]); });
  c.mul_g = TimePerOp(iterations,
                      [&](size_t i) { eacc = group.Mul(eacc, e[i]); });
  c.exp_g = TimePerOp(iterations,
                      [&](size_t i) { eacc = group.Exp(e[i], s[i + 1]); });
  // Keep the accumulators observable so the loops are not elided.
  volatile uint8_t sink = acc.bytes[0] ^ eacc.bytes[0];
  (void)sink;
  return c;
}

double ModelClientSeconds(Scheme scheme, const Workload& w,
                          const UnitCosts& costs) {
  return PhaseSum(ExpectedCounters(scheme, w), costs,
                  {Phase::kKeyGen, Phase::kProbGen, Phase::kVerify});
}

double ModelServerSeconds(Scheme scheme, const Workload& w,
                          const UnitCosts& costs) {
  return PhaseSum(ExpectedCounters(scheme, w), costs, {Phase::kCompute});
}

std::string_view FigureFileName(Figure f) {
  switch (f) {
    case Figure::kClientTime:
      return "client_time.csv";
    case Figure::kServerTime:
      return "server_time.csv";
    case Figure::kCommunication:
      return "communication.csv";
    case Figure::kStorage:
      return "storage.csv";
  }
  return "unknown.csv";
}

std::vector<FigureRow> FigureSeries(Figure figure, const FigureGrid& grid,
                                    const UnitCosts& costs) {
  std::vector<FigureRow> rows;
  auto sweep = [&](char name, const std::vector<uint64_t>& values,
                   uint64_t Workload::*field) {
    for (uint64_t v : values) {
      MMVC_ENFORCE(v > 0, "sweep values must be positive");
      Workload w = grid.base;
      w.*field = v;
      rows.push_back({name, v, w, Value(figure, Scheme::kMmvc, w, grid, costs),
                      Value(figure, Scheme::kFg12, w, grid, costs)});
    }
  };
  sweep('a', grid.a_values, &Workload::a);
  sweep('b', grid.b_values, &Workload::b);
  sweep('m', grid.m_values, &Workload::m);
  sweep('d', grid.d_values, &Workload::d);
  return rows;
}

void WriteFigureCsv(std::ostream& os, Figure figure,
                    const std::vector<FigureRow>& rows, uint64_t seed) {
  os << "# seed=" << seed << " unit=" << Unit(figure) << "\n";
  os << "swept,value,a,b,m,d,mmvc,fg12,ratio\n";
  os << std::setprecision(8);
  for (const auto& r : rows) {
    os << r.swept << "," << r.value << "," << r.dims.a << "," << r.dims.b
       << "," << r.dims.m << "," << r.dims.d << "," << r.mmvc << ","
       << r.fg12 << "," << r.ratio() << "\n";
  }
}

std::vector<std::filesystem::path> EmitFigureSeries(
    const FigureGrid& grid, const UnitCosts& costs,
    const std::filesystem::path& dir, uint64_t seed) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> paths;
  for (Figure f : kAllFigures) {
    const auto path = dir / FigureFileName(f);
    std::ofstream out(path);
    if (!out) throw ProtocolError("cannot write " + path.string());
    WriteFigureCsv(out, f, FigureSeries(f, grid, costs), seed);
    paths.push_back(path);
  }
  return paths;
}

}  // namespace mmvc::bench
