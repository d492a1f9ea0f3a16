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

#include "mmvc/scheme/matrix.h"

#include "mmvc/common/error.h"

namespace mmvc {

Matrix::Matrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(size_t rows, size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  MMVC_ENFORCE(entries_.size() == rows_ * cols_, "matrix shape mismatch");
}

Matrix Matrix::Random(const Group& group, size_t rows, size_t cols,
                      Rng& rng) {
  return Matrix(rows, cols, RandomVector(group, rows * cols, rng));
}

Matrix Matrix::FromUints(
    const Group& group,
    std::initializer_list<std::initializer_list<uint64_t>> rows) {
  const size_t m = rows.size();
  const size_t d = m == 0 ? 0 : rows.begin()->size();
  std::vector<Scalar> entries;
  entries.reserve(m * d);
  for (const auto& r : rows) {
    MMVC_ENFORCE(r.size() == d, "ragged matrix");
    for (uint64_t v : r) entries.push_back(group.FromUint(v));
  }
  return Matrix(m, d, std::move(entries));
}

std::vector<Scalar> RandomVector(const Group& group, size_t n, Rng& rng) {
  std::vector<Scalar> v;
  v.reserve(n);
  for (size_t i = 0; i < n; ++i) v.push_back(group.SampleScalar(rng));
  return v;
}

std::vector<Scalar> UintVector(const Group& group,
                               std::initializer_list<uint64_t> values) {
  std::vector<Scalar> v;
  v.reserve(values.size());
  for (uint64_t x : values) v.push_back(group.FromUint(x));
  return v;
}

std::vector<Scalar> MatrixVector(const Group& group, const Matrix& f,
                                 std::span<const Scalar> x) {
  MMVC_ENFORCE(f.cols() == x.size(), "d mismatch");
  std::vector<Scalar> y;
  y.reserve(f.rows());
  for (size_t i = 0; i < f.rows(); ++i) {
    y.push_back(InnerProduct(group, f.row(i), x));
  }
  return y;
}

}  // namespace mmvc
