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

#include <vector>

#include "doctest.h"
#include "mshift/corpus.h"
#include "mshift/matroid.h"
#include "test_support.h"

namespace mshift {
namespace {

using testing::Family;
using testing::IntSet;
using testing::ToFamily;
using testing::ToSet;
using Edges = std::vector<std::pair<int, int>>;

Subset S(int n, std::initializer_list<int> idx) {
  return Subset::FromIndices(GroundSet(n), idx);
}

const Edges kTriangle{{1, 2}, {2, 3}, {1, 3}};
const Edges kPath3{{1, 2}, {2, 3}};
const Edges kC4{{1, 2}, {2, 3}, {3, 4}, {4, 1}};
const Edges kK4{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
const Edges kDiamond{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};

std::vector<Matroid> AllTestMatroids() {
  std::vector<Matroid> all;
  for (auto& e : MatroidCorpus()) all.push_back(e.matroid);
  for (auto& m : testing::RandomMatroids(7, 40)) all.push_back(m);
  return all;
}

TEST_CASE("from_bases accepts U_{2,3}") {
  auto r = Matroid::FromBases(GroundSet(3),
                              {S(3, {1, 2}), S(3, {1, 3}), S(3, {2, 3})});
  REQUIRE(std::holds_alternative<Matroid>(r));
  CHECK(std::get<Matroid>(r) == Uniform(2, GroundSet(3)));
  CHECK(std::get<Matroid>(r).rank() == 2);
}

TEST_CASE("from_bases reports the exchange witness") {
  std::vector<Subset> bases{S(4, {3, 4}), S(4, {1, 2})};
  // Brute-force oracle agrees that this is not a matroid.
  CHECK_FALSE(testing::ExchangeHolds(ToFamily(bases)));
  auto r = Matroid::FromBases(GroundSet(4), bases);
  REQUIRE(std::holds_alternative<MatroidError>(r));
  const auto& err = std::get<MatroidError>(r);
  CHECK(err.kind == MatroidError::Kind::kExchange);
  CHECK(*err.first == S(4, {1, 2}));
  CHECK(*err.second == S(4, {3, 4}));
  CHECK(err.element == 1);
  CHECK_THROWS_AS(Matroid::FromBasesOrThrow(GroundSet(4), bases),
                  std::invalid_argument);
}

TEST_CASE("from_bases rejects unequal cardinalities and empty families") {
  auto r = Matroid::FromBases(GroundSet(2), {S(2, {1}), S(2, {1, 2})});
  REQUIRE(std::holds_alternative<MatroidError>(r));
  CHECK(std::get<MatroidError>(r).kind ==
        MatroidError::Kind::kUnequalCardinality);
  auto empty = Matroid::FromBases(GroundSet(2), {});
  REQUIRE(std::holds_alternative<MatroidError>(empty));
  CHECK(std::get<MatroidError>(empty).kind == MatroidError::Kind::kEmpty);
  CHECK_THROWS_AS(Matroid::FromBases(GroundSet(2), {S(3, {1})}),
                  std::invalid_argument);
}

TEST_CASE("from_bases agrees with the brute-force exchange oracle") {
  // Every family of 2-subsets of [4].
  auto pairs = SubsetsOfSize(GroundSet(4), 2);
  for (std::uint32_t pick = 1; pick < (1u << pairs.size()); ++pick) {
    std::vector<Subset> family;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (pick >> i & 1u) family.push_back(pairs[i]);
    }
    auto r = Matroid::FromBases(GroundSet(4), family);
    CHECK(std::holds_alternative<Matroid>(r) ==
          testing::ExchangeHolds(ToFamily(family)));
  }
}

TEST_CASE("uniform matroids") {
  CHECK(ToFamily(Uniform(2, GroundSet(3)).bases()) ==
        Family{{1, 2}, {1, 3}, {2, 3}});
  CHECK(ToFamily(Uniform(1, GroundSet(3)).bases()) == Family{{1}, {2}, {3}});
  CHECK(ToFamily(Uniform(3, GroundSet(3)).bases()) == Family{{1, 2, 3}});
  CHECK_THROWS_AS(Uniform(0, GroundSet(3)), std::invalid_argument);
  CHECK_THROWS_AS(Uniform(4, GroundSet(3)), std::invalid_argument);
}

TEST_CASE("graphic matroids") {
  CHECK(ToFamily(Graphic(3, kTriangle).bases()) ==
        Family{{1, 2}, {1, 3}, {2, 3}});
  CHECK(ToFamily(Graphic(3, kPath3).bases()) == Family{{1, 2}});
  CHECK(ToFamily(Graphic(4, kC4).bases()) ==
        Family{{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}});
  for (const auto* edges : {&kC4, &kK4, &kDiamond}) {
    CHECK(static_cast<long>(Graphic(4, *edges).bases().size()) ==
          testing::SpanningTreeCount(4, *edges));
  }
}

TEST_CASE("graphic matroids with loops, parallel edges and bad input") {
  // Edge 2 is a loop, edges 1 and 3 are parallel.
  auto m = Graphic(2, {{1, 2}, {2, 2}, {1, 2}});
  CHECK(ToFamily(m.bases()) == Family{{1}, {3}});
  CHECK_THROWS_AS(Graphic(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graphic(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graphic(2, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("random graphic matroids match the matrix-tree count") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int v = 2 + trial % 4;
    auto edges = testing::RandomConnectedGraph(rng, v, trial % 5);
    CHECK(static_cast<long>(Graphic(v, edges).bases().size()) ==
          testing::SpanningTreeCount(v, edges));
  }
}

TEST_CASE("transversal matroids") {
  GroundSet g(3);
  CHECK(ToFamily(Transversal(g, {S(3, {1, 2}), S(3, {2, 3})}).bases()) ==
        Family{{1, 2}, {1, 3}, {2, 3}});
  CHECK(ToFamily(Transversal(g, {S(3, {1, 2})}).bases()) == Family{{1}, {2}});
  CHECK(ToFamily(Transversal(g, {S(3, {1}), S(3, {2})}).bases()) ==
        Family{{1, 2}});
  CHECK_THROWS_AS(Transversal(g, {}), std::invalid_argument);
}

TEST_CASE("random transversal matroids match the assignment oracle") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    GroundSet g(2 + trial % 5);
    auto sets = testing::RandomSetSystem(rng, g, 1 + trial % 4);
    std::vector<IntSet> plain;
    for (const auto& s : sets) plain.push_back(ToSet(s));
    CHECK(ToFamily(Transversal(g, sets).bases()) ==
          testing::TransversalBasesOracle(plain));
  }
}

TEST_CASE("symmetric exchange") {
  CHECK(CheckSymmetricExchange(Uniform(2, GroundSet(4))));
  CHECK(CheckSymmetricExchange(Graphic(4, kC4)));
  for (const auto& m : AllTestMatroids()) CHECK(CheckSymmetricExchange(m));
}

TEST_CASE("revalidating a matroid is idempotent") {
  for (const auto& m : AllTestMatroids()) {
    auto again = Matroid::FromBases(m.ground(), m.bases());
    REQUIRE(std::holds_alternative<Matroid>(again));
    CHECK(std::get<Matroid>(again) == m);
  }
}

TEST_CASE("basis graph examples") {
  auto tri = BuildBasisGraph(Uniform(2, GroundSet(3)));
  CHECK(tri.vertices.size() == 3);
  CHECK(tri.edges.size() == 3);
  auto single = BuildBasisGraph(Uniform(3, GroundSet(3)));
  CHECK(single.vertices.size() == 1);
  CHECK(single.edges.empty());
  CHECK(single.IsConnected());
  auto points = BuildBasisGraph(Uniform(1, GroundSet(3)));
  CHECK(points.edges.size() == 3);
}

TEST_CASE("basis graph invariants") {
  for (const auto& m : AllTestMatroids()) {
    auto g = BuildBasisGraph(m);
    CHECK(g.IsConnected());
    for (const auto& e : g.edges) {
      CHECK(g.vertices[e.to] ==
            g.vertices[e.from].without(e.pivot_out).with(e.pivot_in));
    }
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      for (std::size_t j = 0; j < g.vertices.size(); ++j) {
        bool adjacent = Distance(g.vertices[i], g.vertices[j]) == Rational(1);
        CHECK(g.Adjacent(i, j) == adjacent);
      }
    }
  }
}

TEST_CASE("disconnected graph detection") {
  BasisGraph g;
  g.vertices = {S(2, {1}), S(2, {2})};
  g.adjacency = {{}, {}};
  CHECK_FALSE(g.IsConnected());
}

TEST_CASE("distance-two neighbors in U_{2,4}") {
  auto m = Uniform(2, GroundSet(4));
  auto r = FindDistanceTwoNeighbors(m, S(4, {1, 2}), S(4, {3, 4}));
  // Oracle: bases adjacent to both endpoints.
  Family expected;
  for (const auto& b : m.bases()) {
    if (Distance(b, S(4, {1, 2})) == Rational(1) &&
        Distance(b, S(4, {3, 4})) == Rational(1)) {
      expected.insert(ToSet(b));
    }
  }
  CHECK(expected == Family{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  Family got;
  for (const auto& c : r.neighbors) got.insert(ToSet(c.basis));
  CHECK(got == expected);
  CHECK(r.e1 == 1);
  CHECK(r.e2 == 2);
  CHECK(r.f1 == 3);
  CHECK(r.f2 == 4);
  REQUIRE(r.witness_pair);
  CHECK(r.witness_pair->first.pivot_out == 1);
  CHECK(r.witness_pair->second.pivot_out == 2);
}

TEST_CASE("distance-two query errors") {
  auto u34 = Uniform(3, GroundSet(4));
  for (const auto& a : u34.bases()) {
    for (const auto& b : u34.bases()) {
      CHECK_THROWS_AS(FindDistanceTwoNeighbors(u34, a, b),
                      std::invalid_argument);
    }
  }
  // The 4-cycle is U_{3,4} in disguise: no pair is at distance two.
  auto c4 = Graphic(4, kC4);
  for (const auto& a : c4.bases()) {
    for (const auto& b : c4.bases()) {
      CHECK_THROWS_AS(FindDistanceTwoNeighbors(c4, a, b),
                      std::invalid_argument);
    }
  }
  auto u24 = Uniform(2, GroundSet(4));
  CHECK_THROWS_AS(FindDistanceTwoNeighbors(u24, S(4, {1, 2, 3}), S(4, {3, 4})),
                  std::invalid_argument);
}

TEST_CASE("common-neighbor structure at distance two") {
  std::size_t pairs = 0;
  auto all = AllTestMatroids();
  all.push_back(Graphic(4, kK4));
  for (const auto& m : all) {
    for (const auto& a : m.bases()) {
      for (const auto& b : m.bases()) {
        if (Difference(a, b).degree() != 2) continue;
        ++pairs;
        auto r = FindDistanceTwoNeighbors(m, a, b);
        CHECK(r.neighbors.size() >= 2);
        REQUIRE(r.witness_pair);
        const auto& [c1, c2] = *r.witness_pair;
        CHECK(c1.pivot_out == r.e1);
        CHECK(c2.pivot_out == r.e2);
        CHECK(std::set<int>{c1.pivot_in, c2.pivot_in} ==
              std::set<int>{r.f1, r.f2});
        for (const auto& c : r.neighbors) {
          CHECK(m.IsBasis(c.basis));
          CHECK(Distance(c.basis, a) == Rational(1));
          CHECK(Distance(c.basis, b) == Rational(1));
        }
      }
    }
  }
  CHECK(pairs > 100);
}

}  // namespace
}  // namespace mshift
