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

#ifndef MSHIFT_IDEAL_H_
#define MSHIFT_IDEAL_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mshift/matroid.h"
#include "mshift/monomial.h"

namespace mshift {

// A squarefree monomial ideal held by its minimal generating set G(I), in
// descending lex order. An empty generator list is the zero ideal.
class MonomialIdeal {
 public:
  // Drops every monomial strictly divisible by another and de-duplicates.
  // Throws std::invalid_argument on empty input or a ground-set mismatch.
  static MonomialIdeal Minimalize(GroundSet ground,
                                  std::vector<SquarefreeMonomial> monomials);
  static MonomialIdeal Zero(GroundSet ground);

  GroundSet ground() const { return ground_; }
  const std::vector<SquarefreeMonomial>& generators() const {
    return generators_;
  }
  std::size_t size() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }
  // True for the zero ideal.
  bool is_equigenerated() const;
  // Common generator degree; nullopt for the zero ideal or mixed degrees.
  std::optional<int> degree() const;
  // Membership: some generator divides m.
  bool Contains(const SquarefreeMonomial& m) const;

  // "(x1*x2, x1*x3)"; the zero ideal renders as "(0)".
  std::string ToString() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  MonomialIdeal(GroundSet ground, std::vector<SquarefreeMonomial> gens)
      : ground_(ground), generators_(std::move(gens)) {}

  GroundSet ground_;
  std::vector<SquarefreeMonomial> generators_;
};

MonomialIdeal IdealFromMatroid(const Matroid& m);

// Treats the generator supports as candidate bases. Throws
// std::invalid_argument for the zero ideal or mixed-degree input.
std::variant<Matroid, MatroidError> IsMatroidal(const MonomialIdeal& ideal);

// G_I: vertices are the generators, edges join generators at distance one.
struct GeneratorGraph {
  std::vector<SquarefreeMonomial> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // first < second
};

// Throws std::invalid_argument unless the ideal is equigenerated.
GeneratorGraph BuildGeneratorGraph(const MonomialIdeal& ideal);

// A(I), generated by lcm(m_i, m_j) over the edges of G_I. Zero when G_I has
// no edges. Throws std::invalid_argument unless the ideal is equigenerated.
MonomialIdeal AdjacencyIdeal(const MonomialIdeal& ideal);

}  // namespace mshift

#endif  // MSHIFT_IDEAL_H_
