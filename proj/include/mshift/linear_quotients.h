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

#ifndef MSHIFT_LINEAR_QUOTIENTS_H_
#define MSHIFT_LINEAR_QUOTIENTS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mshift/betti_table.h"
#include "mshift/ideal.h"
#include "mshift/matroid.h"
#include "mshift/monomial.h"

namespace mshift {

// An ordering m_1..m_r of G(I) with linear quotients, together with
//   set(m_i) = { k : x_k in (m_1, .., m_{i-1}) : (m_i) }.
// Only ComputeSets builds one, so the linear-quotients invariant holds for
// every instance.
class LinearQuotientsOrder {
 public:
  const MonomialIdeal& ideal() const { return ideal_; }
  const std::vector<SquarefreeMonomial>& order() const { return order_; }
  // sets()[i] is set(order()[i]) viewed as a subset of [n].
  const std::vector<Subset>& sets() const { return sets_; }

 private:
  friend class LinearQuotientsBuilder;
  LinearQuotientsOrder(MonomialIdeal ideal,
                       std::vector<SquarefreeMonomial> order,
                       std::vector<Subset> sets)
      : ideal_(std::move(ideal)),
        order_(std::move(order)),
        sets_(std::move(sets)) {}

  MonomialIdeal ideal_;
  std::vector<SquarefreeMonomial> order_;
  std::vector<Subset> sets_;
};

// The colon ideal (m_1..m_{i-1}) : (m_i) has the minimal generator
// m_j / gcd(m_j, m_i), which no x_k with k in set(m_i) divides.
// Indices are zero-based positions in the order.
struct LinearQuotientsViolation {
  std::size_t position;     // i
  std::size_t predecessor;  // j < i
  SquarefreeMonomial generator;
  SquarefreeMonomial predecessor_generator;

  std::string Describe() const;
};

// Generators in descending lex order (x_1 > ... > x_n).
std::vector<SquarefreeMonomial> OrderLex(const MonomialIdeal& ideal);

// Computes set(m_i) for every position and verifies linear quotients.
// Throws std::invalid_argument if `order` is not a permutation of G(I) or the
// ideal is zero.
std::variant<LinearQuotientsOrder, LinearQuotientsViolation> ComputeSets(
    const MonomialIdeal& ideal, const std::vector<SquarefreeMonomial>& order);

// Backtracking search for any order with linear quotients. Descending lex is
// tried first at every step. Limited to ideals with at most 24 generators.
std::optional<LinearQuotientsOrder> FindLinearQuotientsOrder(
    const MonomialIdeal& ideal);

// max |set(m)|.
int Projdim(const LinearQuotientsOrder& lq);

struct ShiftSlice {
  int ell;
  // J_ell: the ideal generated by the ell-th multigraded shifts.
  MonomialIdeal ideal;
  // beta_{ell, a} for every shift a, descending lex.
  std::vector<BettiEntry> betti;
};

// Shifts m * x^A with |A| = ell, A a subset of set(m). Out-of-range ell
// yields the zero ideal and an empty slice.
ShiftSlice Shifts(const LinearQuotientsOrder& lq, int ell);

// Assembles Shifts for ell = 0..projdim.
BettiTable BettiTableFromOrder(const LinearQuotientsOrder& lq);

// Applies AdjacencyIdeal `times` times. The zero ideal is absorbing.
MonomialIdeal IteratedAdjacency(const MonomialIdeal& ideal, int times);

struct LevelCheck {
  int ell;
  MonomialIdeal shift_ideal;  // J_ell
  std::vector<BettiEntry> betti;
  bool matroidal = false;
  std::optional<MatroidError> matroidal_witness;
  bool equals_iterated_adjacency = false;
  MonomialIdeal iterated_adjacency;
  // J_{ell+1} == A(J_ell); absent at ell == projdim.
  std::optional<bool> next_equals_adjacency;

  bool passed() const {
    return matroidal && equals_iterated_adjacency &&
           next_equals_adjacency.value_or(true);
  }
};

struct VerificationReport {
  MonomialIdeal ideal;
  // False when the input is not matroidal; `inapplicable` then holds the
  // exchange witness and no levels are computed.
  bool applicable = false;
  std::optional<MatroidError> inapplicable;
  // Set when descending lex fails to give linear quotients.
  std::optional<LinearQuotientsViolation> lex_failure;
  int projdim = -1;
  std::vector<LevelCheck> levels;
  // Filled in when the caller compares against the homology oracle.
  std::optional<bool> oracle_match;

  bool passed() const;
};

// Checks, for every ell = 0..projdim, that J_ell is matroidal, equals the
// ell-fold iterated adjacency ideal of I, and that J_{ell+1} = A(J_ell).
VerificationReport VerifyTheorem(const MonomialIdeal& ideal);

std::string RenderReport(const VerificationReport& report);

}  // namespace mshift

#endif  // MSHIFT_LINEAR_QUOTIENTS_H_
