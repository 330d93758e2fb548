// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MSHIFT_EXACT_RANK_H_
#define MSHIFT_EXACT_RANK_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mshift {

// Dense row-major integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::int64_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

// Rank over the rationals by fraction-free (Bareiss) elimination. Runs in
// 64-bit arithmetic and restarts with arbitrary precision integers if an
// intermediate minor overflows.
std::size_t RationalRank(const IntegerMatrix& matrix);

// Same elimination carried out in arbitrary precision from the start.
std::size_t RationalRankBigInt(const IntegerMatrix& matrix);

}  // namespace mshift

#endif  // MSHIFT_EXACT_RANK_H_
