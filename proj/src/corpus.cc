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

#include "mshift/corpus.h"

#include <stdexcept>
#include <utility>

namespace mshift {
namespace {

using Edges = std::vector<std::pair<int, int>>;

Subset S(GroundSet g, std::initializer_list<int> idx) {
  return Subset::FromIndices(g, idx);
}

MonomialIdeal IdealOf(int n, std::vector<std::vector<int>> gens) {
  GroundSet g(n);
  std::vector<SquarefreeMonomial> monomials;
  for (const auto& gen : gens) {
    monomials.push_back(SquarefreeMonomial::FromIndices(g, gen));
  }
  return MonomialIdeal::Minimalize(g, std::move(monomials));
}

}  // namespace

std::vector<CorpusEntry> MatroidCorpus(const CorpusOptions& options) {
  std::vector<CorpusEntry> all;
  if (options.uniform) {
    for (int n = 2; n <= options.max_n; ++n) {
      for (int r = 1; r < n; ++r) {
        all.push_back({"U_{" + std::to_string(r) + "," + std::to_string(n) + "}",
                       "uniform", Uniform(r, GroundSet(n))});
      }
    }
  }
  if (options.graphic) {
    all.push_back({"graphic C4", "graphic",
                   Graphic(4, Edges{{1, 2}, {2, 3}, {3, 4}, {4, 1}})});
    all.push_back({"graphic K4", "graphic",
                   Graphic(4, Edges{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                                    {3, 4}})});
    all.push_back({"graphic diamond", "graphic",
                   Graphic(4, Edges{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}})});
  }
  if (options.transversal) {
    GroundSet g4(4), g5(5), g6(6);
    all.push_back({"transversal {12,23,34}", "transversal",
                   Transversal(g4, {S(g4, {1, 2}), S(g4, {2, 3}),
                                    S(g4, {3, 4})})});
    all.push_back({"transversal {123,34,45}", "transversal",
                   Transversal(g5, {S(g5, {1, 2, 3}), S(g5, {3, 4}),
                                    S(g5, {4, 5})})});
    all.push_back({"transversal {12,234,456,16}", "transversal",
                   Transversal(g6, {S(g6, {1, 2}), S(g6, {2, 3, 4}),
                                    S(g6, {4, 5, 6}), S(g6, {1, 6})})});
  }
  std::vector<CorpusEntry> kept;
  for (auto& e : all) {
    if (e.matroid.ground().size() > options.max_n) continue;
    if (options.max_rank > 0 && e.matroid.rank() > options.max_rank) continue;
    kept.push_back(std::move(e));
  }
  return kept;
}

CorpusOptions CorpusOptionsForFamily(const std::string& family, int max_n) {
  CorpusOptions options;
  options.max_n = max_n;
  if (family == "all") return options;
  options.uniform = family == "uniform";
  options.graphic = family == "graphic";
  options.transversal = family == "transversal";
  if (!options.uniform && !options.graphic && !options.transversal) {
    throw std::invalid_argument("unknown corpus family '" + family +
                                "' (expected uniform, graphic, transversal "
                                "or all)");
  }
  return options;
}

std::vector<EquigeneratedFixture> NonMatroidalLinearQuotientsFixtures() {
  return {
      // Edge ideal of the path 1-2-3-4; lex works.
      {"path P4", IdealOf(4, {{1, 2}, {2, 3}, {3, 4}})},
      // Path 1-4-3-2: lex order x1x4, x2x3, x3x4 fails at x2x3.
      {"path 1-4-3-2", IdealOf(4, {{1, 4}, {2, 3}, {3, 4}})},
      // Triangle with a pendant edge; its complement is chordal.
      {"triangle + pendant", IdealOf(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}})},
      // Degree-three path ideal.
      {"3-path ideal", IdealOf(5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}})},
      // Star plus one edge on the leaves.
      {"star + edge", IdealOf(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}})},
  };
}

}  // namespace mshift
