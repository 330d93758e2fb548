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

#include "mshift/exact_rank.h"

#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace mshift {
namespace {

struct Overflow {};

// a*d - b*c, then exact division by `divisor`.
std::int64_t CrossDivide(std::int64_t a, std::int64_t d, std::int64_t b,
                         std::int64_t c, std::int64_t divisor) {
  std::int64_t ad, bc, diff;
  if (__builtin_mul_overflow(a, d, &ad) || __builtin_mul_overflow(b, c, &bc) ||
      __builtin_sub_overflow(ad, bc, &diff)) {
    throw Overflow{};
  }
  return diff / divisor;
}

boost::multiprecision::cpp_int CrossDivide(
    const boost::multiprecision::cpp_int& a,
    const boost::multiprecision::cpp_int& d,
    const boost::multiprecision::cpp_int& b,
    const boost::multiprecision::cpp_int& c,
    const boost::multiprecision::cpp_int& divisor) {
  return (a * d - b * c) / divisor;
}

template <class Int>
std::size_t BareissRank(std::vector<std::vector<Int>> m, std::size_t cols) {
  const std::size_t rows = m.size();
  Int previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = CrossDivide(m[rank][c], m[i][j], m[i][c], m[rank][j],
                              previous);
      }
      m[i][c] = 0;
    }
    previous = m[rank][c];
    ++rank;
  }
  return rank;
}

template <class Int>
std::vector<std::vector<Int>> Rows(const IntegerMatrix& matrix) {
  std::vector<std::vector<Int>> rows(matrix.rows(),
                                     std::vector<Int>(matrix.cols()));
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) rows[r][c] = matrix(r, c);
  }
  return rows;
}

}  // namespace

std::size_t RationalRank(const IntegerMatrix& matrix) {
  if (matrix.rows() == 0 || matrix.cols() == 0) return 0;
  try {
    return BareissRank(Rows<std::int64_t>(matrix), matrix.cols());
  } catch (const Overflow&) {
    return RationalRankBigInt(matrix);
  }
}

std::size_t RationalRankBigInt(const IntegerMatrix& matrix) {
  if (matrix.rows() == 0 || matrix.cols() == 0) return 0;
  return BareissRank(Rows<boost::multiprecision::cpp_int>(matrix),
                     matrix.cols());
}

}  // namespace mshift
