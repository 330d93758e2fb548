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
#include "mshift/linear_quotients.h"
#include "test_support.h"

namespace mshift {
namespace {

using testing::Family;
using testing::IntSet;
using testing::ToFamily;
using testing::ToSet;

SquarefreeMonomial M(int n, std::initializer_list<int> idx) {
  return SquarefreeMonomial::FromIndices(GroundSet(n), idx);
}

MonomialIdeal I(int n, std::vector<std::vector<int>> gens) {
  std::vector<SquarefreeMonomial> ms;
  for (const auto& g : gens) {
    ms.push_back(SquarefreeMonomial::FromIndices(GroundSet(n), g));
  }
  return MonomialIdeal::Minimalize(GroundSet(n), ms);
}

LinearQuotientsOrder Lex(const MonomialIdeal& ideal) {
  auto r = ComputeSets(ideal, OrderLex(ideal));
  REQUIRE(std::holds_alternative<LinearQuotientsOrder>(r));
  return std::get<LinearQuotientsOrder>(r);
}

// Colon-ideal oracle on exponent vectors. quotients[j] is the exponent
// vector of m_j / gcd(m_j, m).
std::vector<std::vector<int>> ColonGenerators(
    const std::vector<SquarefreeMonomial>& prefix, const SquarefreeMonomial& m) {
  std::vector<std::vector<int>> out;
  auto em = m.exponent_vector();
  for (const auto& p : prefix) {
    auto ep = p.exponent_vector();
    std::vector<int> q(ep.size());
    for (std::size_t k = 0; k < ep.size(); ++k) q[k] = std::max(ep[k] - em[k], 0);
    out.push_back(q);
  }
  return out;
}

// {k : x_k in (prefix) : m}, i.e. some quotient divides x_k.
IntSet SetOracle(const std::vector<SquarefreeMonomial>& prefix,
                 const SquarefreeMonomial& m) {
  IntSet set;
  const int n = m.num_variables();
  for (int k = 1; k <= n; ++k) {
    for (const auto& q : ColonGenerators(prefix, m)) {
      bool divides = true;
      for (int v = 1; v <= n; ++v) {
        divides = divides && q[v - 1] <= (v == k ? 1 : 0);
      }
      if (divides) set.insert(k);
    }
  }
  return set;
}

// The colon ideal is generated by variables iff every quotient is divisible
// by one of the variables it contains.
bool LinearOracle(const std::vector<SquarefreeMonomial>& prefix,
                  const SquarefreeMonomial& m) {
  IntSet set = SetOracle(prefix, m);
  for (const auto& q : ColonGenerators(prefix, m)) {
    bool hit = false;
    for (int k : set) hit = hit || q[k - 1] > 0;
    if (!hit) return false;
  }
  return true;
}

long Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<MonomialIdeal> MatroidalIdeals() {
  std::vector<MonomialIdeal> out;
  for (auto& e : MatroidCorpus()) out.push_back(IdealFromMatroid(e.matroid));
  for (auto& m : testing::RandomMatroids(33, 40)) {
    out.push_back(IdealFromMatroid(m));
  }
  return out;
}

TEST_CASE("lex order of generators") {
  auto ideal = I(3, {{2, 3}, {1, 2}, {1, 3}});
  CHECK(OrderLex(ideal) ==
        std::vector{M(3, {1, 2}), M(3, {1, 3}), M(3, {2, 3})});
  CHECK(OrderLex(I(3, {{2}})) == std::vector{M(3, {2})});
  CHECK(OrderLex(I(3, {{3}, {1}, {2}})) ==
        std::vector{M(3, {1}), M(3, {2}), M(3, {3})});
}

TEST_CASE("sets for U_{2,3} and the maximal ideal") {
  auto u23 = Lex(I(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(u23.sets() == std::vector{M(3, {}), M(3, {2}), M(3, {1})});
  auto vars = Lex(I(3, {{1}, {2}, {3}}));
  CHECK(vars.sets() == std::vector{M(3, {}), M(3, {1}), M(3, {1, 2})});
  CHECK(Lex(I(4, {{2, 4}})).sets() == std::vector{M(4, {})});
}

TEST_CASE("sets agree with the colon-ideal oracle") {
  std::mt19937 rng(17);
  std::vector<MonomialIdeal> ideals = MatroidalIdeals();
  for (int trial = 0; trial < 80; ++trial) {
    int n = 3 + trial % 4;
    ideals.push_back(testing::RandomEquigeneratedIdeal(rng, n, 1 + trial % (n - 1),
                                                       2 + trial % 6));
  }
  for (const auto& ideal : ideals) {
    auto order = OrderLex(ideal);
    auto r = ComputeSets(ideal, order);
    std::vector<SquarefreeMonomial> prefix;
    std::optional<std::size_t> first_bad;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (!first_bad && !LinearOracle(prefix, order[i])) first_bad = i;
      prefix.push_back(order[i]);
    }
    if (auto* v = std::get_if<LinearQuotientsViolation>(&r)) {
      REQUIRE(first_bad);
      CHECK(v->position == *first_bad);
      continue;
    }
    CHECK_FALSE(first_bad);
    const auto& lq = std::get<LinearQuotientsOrder>(r);
    prefix.clear();
    for (std::size_t i = 0; i < order.size(); ++i) {
      CHECK(ToSet(lq.sets()[i]) == SetOracle(prefix, order[i]));
      CHECK(Gcd(lq.sets()[i], order[i]).degree() == 0);
      prefix.push_back(order[i]);
    }
  }
}

TEST_CASE("matroidal ideals have linear quotients in lex order") {
  for (const auto& ideal : MatroidalIdeals()) {
    CHECK(std::holds_alternative<LinearQuotientsOrder>(
        ComputeSets(ideal, OrderLex(ideal))));
  }
}

TEST_CASE("linear-quotients violation and bad orders") {
  auto ideal = I(4, {{1, 4}, {2, 3}, {3, 4}});
  auto r = ComputeSets(ideal, OrderLex(ideal));
  REQUIRE(std::holds_alternative<LinearQuotientsViolation>(r));
  const auto& v = std::get<LinearQuotientsViolation>(r);
  CHECK(v.position == 1);
  CHECK(v.predecessor == 0);
  CHECK(v.generator == M(4, {2, 3}));
  CHECK(v.predecessor_generator == M(4, {1, 4}));

  auto fixed = ComputeSets(ideal, {M(4, {1, 4}), M(4, {3, 4}), M(4, {2, 3})});
  CHECK(std::holds_alternative<LinearQuotientsOrder>(fixed));

  CHECK_THROWS_AS(ComputeSets(ideal, {M(4, {1, 4}), M(4, {3, 4})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ComputeSets(ideal, {M(4, {1, 4}), M(4, {3, 4}), M(4, {1, 2})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ComputeSets(MonomialIdeal::Zero(GroundSet(3)), {}),
                  std::invalid_argument);
}

TEST_CASE("order search") {
  auto found = FindLinearQuotientsOrder(I(4, {{1, 4}, {2, 3}, {3, 4}}));
  REQUIRE(found);
  CHECK(found->order().front() == M(4, {1, 4}));
  CHECK_FALSE(FindLinearQuotientsOrder(I(4, {{1, 2}, {3, 4}})));
  for (const auto& f : NonMatroidalLinearQuotientsFixtures()) {
    CHECK(FindLinearQuotientsOrder(f.ideal));
    CHECK(std::holds_alternative<MatroidError>(IsMatroidal(f.ideal)));
  }
}

TEST_CASE("projective dimension") {
  CHECK(Projdim(Lex(I(3, {{1, 2}, {1, 3}, {2, 3}}))) == 1);
  for (int n = 1; n <= 6; ++n) {
    CHECK(Projdim(Lex(IdealFromMatroid(Uniform(1, GroundSet(n))))) == n - 1);
  }
  CHECK(Projdim(Lex(I(3, {{1, 3}}))) == 0);
}

TEST_CASE("shift examples") {
  auto u23 = Lex(I(3, {{1, 2}, {1, 3}, {2, 3}}));
  auto s1 = Shifts(u23, 1);
  CHECK(s1.ideal.ToString() == "(x1*x2*x3)");
  REQUIRE(s1.betti.size() == 1);
  CHECK(s1.betti[0].multidegree == M(3, {1, 2, 3}));
  CHECK(s1.betti[0].multiplicity == 2);

  auto s0 = Shifts(u23, 0);
  CHECK(s0.ideal == u23.ideal());
  for (const auto& e : s0.betti) CHECK(e.multiplicity == 1);

  auto vars = Lex(I(3, {{1}, {2}, {3}}));
  auto s2 = Shifts(vars, 2);
  CHECK(s2.ideal.ToString() == "(x1*x2*x3)");
  REQUIRE(s2.betti.size() == 1);
  CHECK(s2.betti[0].multiplicity == 1);

  CHECK(Shifts(u23, 2).ideal.is_zero());
  CHECK(Shifts(u23, 2).betti.empty());
  CHECK(Shifts(u23, -1).ideal.is_zero());
}

TEST_CASE("betti tables from linear quotients") {
  CHECK(BettiTableFromOrder(Lex(I(3, {{1, 2}, {1, 3}, {2, 3}}))).Totals() ==
        std::vector<std::int64_t>{3, 2});
  CHECK(BettiTableFromOrder(Lex(I(4, {{1}, {2}, {3}, {4}}))).Totals() ==
        std::vector<std::int64_t>{4, 6, 4, 1});
  CHECK(BettiTableFromOrder(Lex(I(4, {{1, 2, 4}}))).Totals() ==
        std::vector<std::int64_t>{1});
}

TEST_CASE("shift counts match binomial sums") {
  for (const auto& ideal : MatroidalIdeals()) {
    auto lq = Lex(ideal);
    auto table = BettiTableFromOrder(lq);
    CHECK(table.projdim() == Projdim(lq));
    auto totals = table.Totals();
    for (int i = 0; i <= Projdim(lq); ++i) {
      long expected = 0;
      for (const auto& s : lq.sets()) expected += Binomial(s.degree(), i);
      CHECK(totals[i] == expected);
    }
    for (const auto& e : table.Slice(0)) CHECK(e.multiplicity == 1);
    CHECK(table.Slice(0).size() == ideal.size());
    for (int ell = 0; ell <= Projdim(lq); ++ell) {
      auto s = Shifts(lq, ell);
      CHECK(s.ideal.degree() == *ideal.degree() + ell);
    }
  }
}

TEST_CASE("first shifts equal the adjacency ideal") {
  std::vector<MonomialIdeal> ideals = MatroidalIdeals();
  for (const auto& f : NonMatroidalLinearQuotientsFixtures()) {
    ideals.push_back(f.ideal);
  }
  for (const auto& ideal : ideals) {
    auto lq = FindLinearQuotientsOrder(ideal);
    REQUIRE(lq);
    CHECK(Shifts(*lq, 1).ideal == AdjacencyIdeal(ideal));
  }
}

TEST_CASE("iterated adjacency") {
  auto u23 = I(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(IteratedAdjacency(u23, 1).ToString() == "(x1*x2*x3)");
  CHECK(IteratedAdjacency(u23, 0) == u23);
  CHECK(IteratedAdjacency(u23, 5).is_zero());
  CHECK(IteratedAdjacency(I(3, {{1}, {2}, {3}}), 2).ToString() == "(x1*x2*x3)");
  CHECK_THROWS_AS(IteratedAdjacency(u23, -1), std::invalid_argument);
}

TEST_CASE("theorem verification") {
  auto u23 = VerifyTheorem(I(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(u23.passed());
  CHECK(u23.projdim == 1);
  CHECK(u23.levels.size() == 2);

  auto koszul = VerifyTheorem(I(4, {{1}, {2}, {3}, {4}}));
  CHECK(koszul.passed());
  CHECK(koszul.projdim == 3);
  for (const auto& l : koszul.levels) {
    CHECK(ToFamily(l.shift_ideal.generators()) ==
          ToFamily(SubsetsOfSize(GroundSet(4), l.ell + 1)));
  }

  auto c4 = VerifyTheorem(IdealFromMatroid(
      Graphic(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}})));
  CHECK(c4.passed());

  auto bad = VerifyTheorem(I(4, {{1, 2}, {3, 4}}));
  CHECK_FALSE(bad.applicable);
  CHECK_FALSE(bad.passed());
  REQUIRE(bad.inapplicable);
  CHECK(bad.inapplicable->element == 1);

  auto mixed = VerifyTheorem(I(3, {{1}, {2, 3}}));
  CHECK_FALSE(mixed.applicable);
  CHECK(mixed.inapplicable->kind == MatroidError::Kind::kUnequalCardinality);

  CHECK(RenderReport(u23).find("result PASS") != std::string::npos);
}

TEST_CASE("theorem holds on every test matroid") {
  for (const auto& ideal : MatroidalIdeals()) {
    auto report = VerifyTheorem(ideal);
    CHECK(report.passed());
  }
}

}  // namespace
}  // namespace mshift
