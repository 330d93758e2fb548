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

#ifndef MSHIFT_MONOMIAL_H_
#define MSHIFT_MONOMIAL_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace mshift {

// Hard cap on the number of variables; a subset of the ground set fits in one
// 32-bit word.
inline constexpr int kMaxVariables = 32;

using Rational = boost::rational<std::int64_t>;

// The variables x_1..x_n. Construction throws std::invalid_argument unless
// 1 <= n <= kMaxVariables.
class GroundSet {
 public:
  explicit GroundSet(int n);

  int size() const { return n_; }
  bool operator==(const GroundSet&) const = default;

 private:
  int n_;
};

// A squarefree monomial x_{k1}*...*x_{kd} over a fixed ground set. It is
// also read as its multidegree and as the subset {k1,..,kd} of [n].
//
// Indices are 1-based at the API surface and zero-based in the bitmask.
class SquarefreeMonomial {
 public:
  // The unit monomial 1 (empty support).
  explicit SquarefreeMonomial(GroundSet ground);

  // Throws std::invalid_argument if an index is outside 1..n or repeated.
  static SquarefreeMonomial FromIndices(GroundSet ground,
                                        std::span<const int> indices);
  static SquarefreeMonomial FromIndices(GroundSet ground,
                                        std::initializer_list<int> indices);
  // Bit k-1 set means x_k divides the monomial.
  static SquarefreeMonomial FromMask(GroundSet ground, std::uint32_t mask);

  // Accepts "x1*x2*x3", "1" for the unit monomial, or the bracket form
  // "[1,2,3]". Whitespace is ignored.
  static SquarefreeMonomial Parse(GroundSet ground, std::string_view text);

  GroundSet ground() const { return GroundSet(n_); }
  int num_variables() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int degree() const;
  bool contains(int index) const;
  // Exponent nu_k in {0,1}.
  int exponent(int index) const { return contains(index) ? 1 : 0; }
  std::vector<int> indices() const;
  std::vector<int> exponent_vector() const;

  SquarefreeMonomial with(int index) const;
  SquarefreeMonomial without(int index) const;

  // "x1*x2*x3"; the unit monomial renders as "1".
  std::string ToString() const;

  bool operator==(const SquarefreeMonomial&) const = default;

  // Orders first by ground-set size, then lexicographically with
  // x_1 > x_2 > ... > x_n. Use LexCompare when a mismatch should throw.
  std::strong_ordering operator<=>(const SquarefreeMonomial& other) const;

 private:
  SquarefreeMonomial(int n, std::uint32_t mask) : n_(n), mask_(mask) {}

  int n_;
  std::uint32_t mask_;
};

// All binary operations below throw std::invalid_argument when the operands
// live on different ground sets.

SquarefreeMonomial Lcm(const SquarefreeMonomial& a, const SquarefreeMonomial& b);
SquarefreeMonomial Gcd(const SquarefreeMonomial& a, const SquarefreeMonomial& b);

// True iff a | b, i.e. supp(a) is a subset of supp(b).
bool Divides(const SquarefreeMonomial& a, const SquarefreeMonomial& b);

// Pure lex with x_1 > ... > x_n: at the smallest index where the exponent
// vectors differ, the monomial containing that index is the greater one.
std::strong_ordering LexCompare(const SquarefreeMonomial& a,
                                const SquarefreeMonomial& b);

// Support of a with the support of b removed (a / gcd(a, b)).
SquarefreeMonomial Difference(const SquarefreeMonomial& a,
                              const SquarefreeMonomial& b);

// d(a,b) = 1/2 * sum_k |nu_k(a) - nu_k(b)| on arbitrary exponent vectors.
// Throws if the vectors differ in length or hold negative exponents.
Rational Distance(std::span<const int> a_exponents,
                  std::span<const int> b_exponents);
Rational Distance(const SquarefreeMonomial& a, const SquarefreeMonomial& b);

// Greater-first comparator for sorting into the canonical descending lex
// order.
struct LexGreater {
  bool operator()(const SquarefreeMonomial& a,
                  const SquarefreeMonomial& b) const {
    return a > b;
  }
};

// Every subset of [n] of size k, in descending lex order.
std::vector<SquarefreeMonomial> SubsetsOfSize(GroundSet ground, int k);

}  // namespace mshift

template <>
struct std::hash<mshift::SquarefreeMonomial> {
  std::size_t operator()(const mshift::SquarefreeMonomial& m) const noexcept {
    return std::hash<std::uint64_t>()(
        (static_cast<std::uint64_t>(m.num_variables()) << 32) | m.mask());
  }
};

#endif  // MSHIFT_MONOMIAL_H_
