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

#ifndef MSHIFT_MATROID_H_
#define MSHIFT_MATROID_H_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "mshift/monomial.h"

namespace mshift {

// A subset of the ground set. Bases and monomial supports share the type.
using Subset = SquarefreeMonomial;

// Why a candidate family is not the set of bases of a matroid.
struct MatroidError {
  enum class Kind { kEmpty, kUnequalCardinality, kExchange };

  Kind kind;
  // kUnequalCardinality: two bases of different size. kExchange: the
  // violating triple (first, second, element) with element in first \ second
  // such that no first - element + y is a basis for y in second \ first.
  std::optional<Subset> first;
  std::optional<Subset> second;
  int element = 0;

  std::string Describe() const;
};

class Matroid {
 public:
  // Validates equal cardinality and the exchange property exhaustively.
  // Duplicate candidates are merged. On failure the first witness in
  // canonical order is returned: pairs (B1, B2) in descending lex order of
  // bases, elements of B1 \ B2 ascending.
  static std::variant<Matroid, MatroidError> FromBases(
      GroundSet ground, std::vector<Subset> candidates);

  // As FromBases, but throws std::invalid_argument carrying the witness.
  static Matroid FromBasesOrThrow(GroundSet ground,
                                  std::vector<Subset> candidates);

  GroundSet ground() const { return ground_; }
  int rank() const { return rank_; }
  // Sorted in descending lex order.
  const std::vector<Subset>& bases() const { return bases_; }
  bool IsBasis(const Subset& s) const;
  // Position of `basis` in bases(), or nullopt.
  std::optional<std::size_t> IndexOf(const Subset& basis) const;

  bool operator==(const Matroid& other) const {
    return ground_ == other.ground_ && bases_ == other.bases_;
  }

 private:
  Matroid(GroundSet ground, std::vector<Subset> bases);

  GroundSet ground_;
  int rank_;
  std::vector<Subset> bases_;
  std::unordered_set<Subset> lookup_;
};

// U_{r,n}: every r-subset of [n]. Requires 0 < r <= n.
Matroid Uniform(int rank, GroundSet ground);

// Cycle matroid of a connected multigraph. Vertices are 1..num_vertices;
// edge i (1-based position in `edges`) becomes ground element i. Loops and
// parallel edges are allowed. Throws if the graph is disconnected or has no
// edges.
Matroid Graphic(int num_vertices,
                const std::vector<std::pair<int, int>>& edges);

// Transversal matroid: bases are the maximum-size partial transversals of
// `sets` (subsets of [n]).
Matroid Transversal(GroundSet ground, const std::vector<Subset>& sets);

// Exhaustive symmetric exchange check. Always true for a valid Matroid.
bool CheckSymmetricExchange(const Matroid& m);

struct BasisGraphEdge {
  std::size_t from;  // index into vertices
  std::size_t to;
  int pivot_out;  // element of vertices[from] \ vertices[to]
  int pivot_in;   // element of vertices[to] \ vertices[from]
};

struct BasisGraph {
  std::vector<Subset> vertices;
  std::vector<BasisGraphEdge> edges;  // from < to
  std::vector<std::vector<std::size_t>> adjacency;

  bool IsConnected() const;
  bool Adjacent(std::size_t u, std::size_t v) const;
};

BasisGraph BuildBasisGraph(const Matroid& m);

// A common neighbor C of two bases at distance two, reached from the first
// basis by pivoting out `pivot_out` and pivoting in `pivot_in`.
struct CommonNeighbor {
  Subset basis;
  int pivot_out;
  int pivot_in;
};

struct DistanceTwoNeighbors {
  // first \ second = {e1, e2}, second \ first = {f1, f2}, e1 < e2, f1 < f2.
  int e1, e2, f1, f2;
  std::vector<CommonNeighbor> neighbors;
  // Two neighbors pivoting out e1 and e2 respectively while pivoting in f1
  // and f2 in some assignment, if such a pair exists.
  std::optional<std::pair<CommonNeighbor, CommonNeighbor>> witness_pair;
};

// All common neighbors of two bases at basis-graph distance exactly two.
// Throws std::invalid_argument if either input is not a basis or the pair is
// not at distance two.
DistanceTwoNeighbors FindDistanceTwoNeighbors(const Matroid& m,
                                              const Subset& first,
                                              const Subset& second);

}  // namespace mshift

#endif  // MSHIFT_MATROID_H_
