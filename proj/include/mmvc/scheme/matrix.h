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

#include <cstddef>
#include <span>
#include <vector>

#include "mmvc/algebra/group.h"

namespace mmvc {

// Dense m x d matrix over Z_p, row-major.
class Matrix {
 public:
  Matrix() = default;
  // Zero matrix.
  Matrix(size_t rows, size_t cols);
  Matrix(size_t rows, size_t cols, std::vector<Scalar> entries);

  static Matrix Random(const Group& group, size_t rows, size_t cols,
                       Rng& rng);
  static Matrix FromUints(const Group& group,
                          std::initializer_list<std::initializer_list<uint64_t>> rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Scalar& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
  Scalar& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
  std::span<const Scalar> row(size_t i) const {
    return std::span<const Scalar>(entries_).subspan(i * cols_, cols_);
  }
  std::span<const Scalar> entries() const { return entries_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

std::vector<Scalar> RandomVector(const Group& group, size_t n, Rng& rng);
std::vector<Scalar> UintVector(const Group& group,
                               std::initializer_list<uint64_t> values);

// y = F x mod p: m(d - 1) additions and md multiplications.
std::vector<Scalar> MatrixVector(const Group& group, const Matrix& f,
                                 std::span<const Scalar> x);

}  // namespace mmvc
