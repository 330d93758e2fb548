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

#ifndef MSHIFT_BETTI_ORACLE_H_
#define MSHIFT_BETTI_ORACLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "mshift/betti_table.h"
#include "mshift/ideal.h"
#include "mshift/monomial.h"

// Multigraded Betti numbers computed from scratch as reduced homology of
// upper Koszul simplicial complexes:
//
//   beta_{i,a}(I) = dim H~_{i-1}(K^a(I)),
//   K^a(I) = { tau subset of supp(a) squarefree : x^(a - tau) in I }.
//
// Nothing here depends on generator orders or linear quotients, so the
// result can be compared against the mapping-cone shifts directly.

namespace mshift {

// Largest ground set for which the full 2^n multidegree sweep is allowed.
inline constexpr int kOracleMaxVariables = 14;

class SimplicialComplex {
 public:
  // `faces` must be downward closed; throws std::invalid_argument otherwise.
  // An empty list is the void complex, {0} the irrelevant complex {emptyset}.
  SimplicialComplex(GroundSet ground, std::vector<std::uint32_t> faces);

  GroundSet ground() const { return ground_; }
  // Sorted by size, then by mask.
  const std::vector<std::uint32_t>& faces() const { return faces_; }
  bool is_void() const { return faces_.empty(); }
  // Largest face dimension; -2 for the void complex.
  int dimension() const;
  // f_q for q = -1..dimension(), stored at index q + 1.
  std::vector<std::int64_t> FaceCounts() const;

 private:
  GroundSet ground_;
  std::vector<std::uint32_t> faces_;
};

// Reduced homology ranks over a characteristic-zero field.
struct HomologyRanks {
  // ranks[q + 1] = dim H~_q for q = -1, 0, ...
  std::vector<std::int64_t> ranks;

  std::int64_t at(int q) const {
    std::size_t idx = static_cast<std::size_t>(q + 1);
    return q >= -1 && idx < ranks.size() ? ranks[idx] : 0;
  }
};

SimplicialComplex UpperKoszul(const MonomialIdeal& ideal,
                              const SquarefreeMonomial& multidegree);

// Same complex for an arbitrary non-negative exponent vector of length n.
SimplicialComplex UpperKoszul(const MonomialIdeal& ideal,
                              std::span<const int> exponents);

HomologyRanks ReducedHomology(const SimplicialComplex& complex);

// Full table over all squarefree multidegrees. Throws std::invalid_argument
// when n exceeds kOracleMaxVariables.
BettiTable BettiTableOracle(const MonomialIdeal& ideal);

}  // namespace mshift

#endif  // MSHIFT_BETTI_ORACLE_H_
