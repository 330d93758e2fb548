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

#include "mshift/monomial.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace mshift {
namespace {

void CheckSameGround(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
  if (a.num_variables() != b.num_variables()) {
    throw std::invalid_argument("monomials over different ground sets (n=" +
                                std::to_string(a.num_variables()) + " vs n=" +
                                std::to_string(b.num_variables()) + ")");
  }
}

std::string StripSpaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

int ParseIndex(std::string_view token) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() ||
      token.empty()) {
    throw std::invalid_argument("bad variable index '" + std::string(token) +
                                "'");
  }
  return value;
}

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxVariables) {
    throw std::invalid_argument("ground set size must be in 1.." +
                                std::to_string(kMaxVariables) + ", got " +
                                std::to_string(n));
  }
}

SquarefreeMonomial::SquarefreeMonomial(GroundSet ground)
    : n_(ground.size()), mask_(0) {}

SquarefreeMonomial SquarefreeMonomial::FromIndices(
    GroundSet ground, std::span<const int> indices) {
  std::uint32_t mask = 0;
  for (int k : indices) {
    if (k < 1 || k > ground.size()) {
      throw std::invalid_argument("variable index " + std::to_string(k) +
                                  " outside 1.." +
                                  std::to_string(ground.size()));
    }
    std::uint32_t bit = 1u << (k - 1);
    if (mask & bit) {
      throw std::invalid_argument("variable index " + std::to_string(k) +
                                  " repeated in a squarefree monomial");
    }
    mask |= bit;
  }
  return SquarefreeMonomial(ground.size(), mask);
}

SquarefreeMonomial SquarefreeMonomial::FromIndices(
    GroundSet ground, std::initializer_list<int> indices) {
  return FromIndices(ground, std::span<const int>(indices.begin(),
                                                  indices.size()));
}

SquarefreeMonomial SquarefreeMonomial::FromMask(GroundSet ground,
                                                std::uint32_t mask) {
  if (ground.size() < 32 && (mask >> ground.size()) != 0) {
    throw std::invalid_argument("mask has bits outside the ground set");
  }
  return SquarefreeMonomial(ground.size(), mask);
}

SquarefreeMonomial SquarefreeMonomial::Parse(GroundSet ground,
                                             std::string_view text) {
  std::string s = StripSpaces(text);
  if (s.empty()) throw std::invalid_argument("empty monomial text");
  std::vector<int> indices;
  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unterminated '[' in " + s);
    std::string_view body(s.data() + 1, s.size() - 2);
    if (!body.empty()) {
      for (auto token : Split(body, ',')) indices.push_back(ParseIndex(token));
    }
  } else if (s != "1") {
    for (auto factor : Split(s, '*')) {
      if (factor.size() < 2 || (factor[0] != 'x' && factor[0] != 'X')) {
        throw std::invalid_argument("bad factor '" + std::string(factor) +
                                    "' in " + s);
      }
      indices.push_back(ParseIndex(factor.substr(1)));
    }
  }
  return FromIndices(ground, indices);
}

int SquarefreeMonomial::degree() const { return std::popcount(mask_); }

bool SquarefreeMonomial::contains(int index) const {
  return index >= 1 && index <= n_ && ((mask_ >> (index - 1)) & 1u);
}

std::vector<int> SquarefreeMonomial::indices() const {
  std::vector<int> out;
  for (int k = 1; k <= n_; ++k) {
    if (contains(k)) out.push_back(k);
  }
  return out;
}

std::vector<int> SquarefreeMonomial::exponent_vector() const {
  std::vector<int> out(n_);
  for (int k = 1; k <= n_; ++k) out[k - 1] = exponent(k);
  return out;
}

SquarefreeMonomial SquarefreeMonomial::with(int index) const {
  if (index < 1 || index > n_) throw std::invalid_argument("index out of range");
  return SquarefreeMonomial(n_, mask_ | (1u << (index - 1)));
}

SquarefreeMonomial SquarefreeMonomial::without(int index) const {
  if (index < 1 || index > n_) throw std::invalid_argument("index out of range");
  return SquarefreeMonomial(n_, mask_ & ~(1u << (index - 1)));
}

std::string SquarefreeMonomial::ToString() const {
  if (mask_ == 0) return "1";
  std::string out;
  for (int k : indices()) {
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(k);
  }
  return out;
}

std::strong_ordering SquarefreeMonomial::operator<=>(
    const SquarefreeMonomial& other) const {
  if (n_ != other.n_) return n_ <=> other.n_;
  std::uint32_t diff = mask_ ^ other.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  std::uint32_t lowest = diff & (~diff + 1);
  return (mask_ & lowest) ? std::strong_ordering::greater
                          : std::strong_ordering::less;
}

SquarefreeMonomial Lcm(const SquarefreeMonomial& a,
                       const SquarefreeMonomial& b) {
  CheckSameGround(a, b);
  return SquarefreeMonomial::FromMask(a.ground(), a.mask() | b.mask());
}

SquarefreeMonomial Gcd(const SquarefreeMonomial& a,
                       const SquarefreeMonomial& b) {
  CheckSameGround(a, b);
  return SquarefreeMonomial::FromMask(a.ground(), a.mask() & b.mask());
}

bool Divides(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
  CheckSameGround(a, b);
  return (a.mask() & ~b.mask()) == 0;
}

std::strong_ordering LexCompare(const SquarefreeMonomial& a,
                                const SquarefreeMonomial& b) {
  CheckSameGround(a, b);
  return a <=> b;
}

SquarefreeMonomial Difference(const SquarefreeMonomial& a,
                              const SquarefreeMonomial& b) {
  CheckSameGround(a, b);
  return SquarefreeMonomial::FromMask(a.ground(), a.mask() & ~b.mask());
}

Rational Distance(std::span<const int> a_exponents,
                  std::span<const int> b_exponents) {
  if (a_exponents.size() != b_exponents.size()) {
    throw std::invalid_argument("exponent vectors of different lengths");
  }
  std::int64_t total = 0;
  for (std::size_t k = 0; k < a_exponents.size(); ++k) {
    if (a_exponents[k] < 0 || b_exponents[k] < 0) {
      throw std::invalid_argument("negative exponent");
    }
    total += std::abs(a_exponents[k] - b_exponents[k]);
  }
  return Rational(total, 2);
}

Rational Distance(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
  CheckSameGround(a, b);
  auto ea = a.exponent_vector();
  auto eb = b.exponent_vector();
  return Distance(ea, eb);
}

std::vector<SquarefreeMonomial> SubsetsOfSize(GroundSet ground, int k) {
  std::vector<SquarefreeMonomial> out;
  const int n = ground.size();
  if (k < 0 || k > n) return out;
  // Walk k-combinations of indices in lexicographic order of index tuples,
  // which is exactly descending monomial lex order.
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    out.push_back(SquarefreeMonomial::FromIndices(ground, idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace mshift
