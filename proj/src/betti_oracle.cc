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

#include "mshift/betti_oracle.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "mshift/exact_rank.h"

namespace mshift {
namespace {

bool SizeThenMask(std::uint32_t a, std::uint32_t b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

// Faces of K^a given the multidegree support and which of its variables
// appear with exponent exactly one (only those can leave a - tau nonzero
// when removed).
std::vector<std::uint32_t> KoszulFaces(const MonomialIdeal& ideal,
                                       std::uint32_t support,
                                       std::uint32_t exponent_one) {
  std::vector<std::uint32_t> faces;
  std::uint32_t tau = support;
  while (true) {
    std::uint32_t remaining = support & ~(tau & exponent_one);
    if (ideal.Contains(SquarefreeMonomial::FromMask(ideal.ground(), remaining))) {
      faces.push_back(tau);
    }
    if (tau == 0) break;
    tau = (tau - 1) & support;
  }
  return faces;
}

}  // namespace

SimplicialComplex::SimplicialComplex(GroundSet ground,
                                     std::vector<std::uint32_t> faces)
    : ground_(ground), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), SizeThenMask);
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  std::unordered_map<std::uint32_t, bool> present;
  for (auto f : faces_) present[f] = true;
  for (auto f : faces_) {
    if (ground.size() < 32 && (f >> ground.size()) != 0) {
      throw std::invalid_argument("face outside the ground set");
    }
    for (std::uint32_t rest = f; rest; rest &= rest - 1) {
      std::uint32_t facet = f & ~(rest & (~rest + 1));
      if (!present.count(facet)) {
        throw std::invalid_argument("face family is not downward closed");
      }
    }
  }
}

int SimplicialComplex::dimension() const {
  if (faces_.empty()) return -2;
  return std::popcount(faces_.back()) - 1;
}

std::vector<std::int64_t> SimplicialComplex::FaceCounts() const {
  std::vector<std::int64_t> counts(dimension() + 2, 0);
  for (auto f : faces_) ++counts[std::popcount(f)];
  return counts;
}

SimplicialComplex UpperKoszul(const MonomialIdeal& ideal,
                              const SquarefreeMonomial& multidegree) {
  if (multidegree.num_variables() != ideal.ground().size()) {
    throw std::invalid_argument("multidegree on a different ground set");
  }
  return SimplicialComplex(
      ideal.ground(),
      KoszulFaces(ideal, multidegree.mask(), multidegree.mask()));
}

SimplicialComplex UpperKoszul(const MonomialIdeal& ideal,
                              std::span<const int> exponents) {
  if (static_cast<int>(exponents.size()) != ideal.ground().size()) {
    throw std::invalid_argument("exponent vector length differs from n");
  }
  std::uint32_t support = 0, exponent_one = 0;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] < 0) throw std::invalid_argument("negative exponent");
    if (exponents[k] > 0) support |= 1u << k;
    if (exponents[k] == 1) exponent_one |= 1u << k;
  }
  return SimplicialComplex(ideal.ground(),
                           KoszulFaces(ideal, support, exponent_one));
}

HomologyRanks ReducedHomology(const SimplicialComplex& complex) {
  HomologyRanks result;
  if (complex.is_void()) return result;

  // Faces grouped by size; size s holds the (s-1)-dimensional faces.
  const int top = complex.dimension();
  std::vector<std::vector<std::uint32_t>> by_size(top + 2);
  for (auto f : complex.faces()) by_size[std::popcount(f)].push_back(f);

  // boundary_rank[s] = rank of the map from size-s faces to size-(s-1).
  std::vector<std::int64_t> boundary_rank(top + 3, 0);
  for (int s = 1; s <= top + 1; ++s) {
    const auto& cols = by_size[s];
    const auto& rows = by_size[s - 1];
    std::unordered_map<std::uint32_t, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
    IntegerMatrix boundary(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      int position = 0;
      for (std::uint32_t rest = cols[c]; rest; rest &= rest - 1) {
        std::uint32_t vertex = rest & (~rest + 1);
        boundary(row_of.at(cols[c] & ~vertex), c) = (position % 2) ? -1 : 1;
        ++position;
      }
    }
    boundary_rank[s] = static_cast<std::int64_t>(RationalRank(boundary));
  }
  result.ranks.resize(top + 2);
  for (int s = 0; s <= top + 1; ++s) {
    result.ranks[s] = static_cast<std::int64_t>(by_size[s].size()) -
                      boundary_rank[s] - boundary_rank[s + 1];
  }
  return result;
}

BettiTable BettiTableOracle(const MonomialIdeal& ideal) {
  const int n = ideal.ground().size();
  if (n > kOracleMaxVariables) {
    throw std::invalid_argument(
        "homology oracle sweeps 2^n multidegrees and is limited to n <= " +
        std::to_string(kOracleMaxVariables) + " (got n=" + std::to_string(n) +
        ")");
  }
  BettiTable table;
  const std::uint32_t count = 1u << n;
  for (std::uint32_t a = 0; a < count; ++a) {
    auto multidegree = SquarefreeMonomial::FromMask(ideal.ground(), a);
    if (!ideal.Contains(multidegree)) continue;
    HomologyRanks h = ReducedHomology(UpperKoszul(ideal, multidegree));
    for (std::size_t idx = 0; idx < h.ranks.size(); ++idx) {
      // ranks[idx] is H~_{idx-1}, contributing to beta_{idx}.
      table.Add(static_cast<int>(idx), multidegree, h.ranks[idx]);
    }
  }
  return table;
}

}  // namespace mshift
