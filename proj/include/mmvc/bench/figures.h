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
#include <filesystem>
#include <string_view>
#include <vector>

#include "mmvc/algebra/counters.h"
#include "mmvc/algebra/group.h"
#include "mmvc/algebra/rng.h"
#include "mmvc/bench/bench.h"

namespace mmvc::bench {

// Seconds per primitive operation.
struct UnitCosts {
  double rng = 0;
  double add_p = 0;
  double mul_p = 0;
  double mul_g = 0;
  double exp_g = 0;

  double Apply(const OpCounters& c) const;
};

UnitCosts MeasureUnitCosts(const Group& group, Rng& rng, size_t iterations);

// Modelled times: operation counts from ExpectedCounters weighted by costs.
double ModelClientSeconds(Scheme scheme, const Workload& w,
                          const UnitCosts& costs);
double ModelServerSeconds(Scheme scheme, const Workload& w,
                          const UnitCosts& costs);

enum class Figure { kClientTime, kServerTime, kCommunication, kStorage };
inline constexpr std::array<Figure, 4> kAllFigures = {
    Figure::kClientTime, Figure::kServerTime, Figure::kCommunication,
    Figure::kStorage};

std::string_view FigureFileName(Figure f);

// Each sweep varies one of a, b, m, d with the other three fixed at base.
struct FigureGrid {
  Workload base{20, 20, 20, 200};
  std::vector<uint64_t> a_values{1, 5, 10, 20, 40, 80};
  std::vector<uint64_t> b_values{1, 5, 10, 20, 40, 80};
  std::vector<uint64_t> m_values{1, 2, 5, 10, 20, 50, 100, 200};
  std::vector<uint64_t> d_values{10, 20, 50, 100, 200, 500};
  uint64_t scalar_bits = 2304;
  uint64_t element_bits = 832;
};

struct FigureRow {
  char swept;  // 'a', 'b', 'm' or 'd'
  uint64_t value;
  Workload dims;
  double mmvc;  // seconds, MiB or KiB depending on the figure
  double fg12;

  double ratio() const { return fg12 / mmvc; }
};

std::vector<FigureRow> FigureSeries(Figure figure, const FigureGrid& grid,
                                    const UnitCosts& costs);

void WriteFigureCsv(std::ostream& os, Figure figure,
                    const std::vector<FigureRow>& rows, uint64_t seed);

// Writes one CSV per figure into dir and returns the paths.
std::vector<std::filesystem::path> EmitFigureSeries(
    const FigureGrid& grid, const UnitCosts& costs,
    const std::filesystem::path& dir, uint64_t seed);

}  // namespace mmvc::bench
