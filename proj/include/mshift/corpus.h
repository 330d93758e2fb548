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

#ifndef MSHIFT_CORPUS_H_
#define MSHIFT_CORPUS_H_

#include <optional>
#include <string>
#include <vector>

#include "mshift/ideal.h"
#include "mshift/matroid.h"

namespace mshift {

struct CorpusOptions {
  // Largest ground set; instances over more elements are skipped.
  int max_n = 6;
  // Largest rank; 0 means no limit.
  int max_rank = 0;
  bool uniform = true;
  bool graphic = true;
  bool transversal = true;
};

struct CorpusEntry {
  std::string name;
  std::string family;
  Matroid matroid;
};

// Uniform U_{r,n} for 1 <= r < n <= max_n, the cycle matroids of C_4, K_4
// and the diamond (K_4 minus an edge), and three fixed transversal systems.
std::vector<CorpusEntry> MatroidCorpus(const CorpusOptions& options = {});

// Selects families by name: "uniform", "graphic", "transversal" or "all".
// Throws std::invalid_argument for anything else.
CorpusOptions CorpusOptionsForFamily(const std::string& family, int max_n);

struct EquigeneratedFixture {
  std::string name;
  MonomialIdeal ideal;
};

// Equigenerated squarefree ideals that are not matroidal but still have
// linear quotients for some order (not always descending lex).
std::vector<EquigeneratedFixture> NonMatroidalLinearQuotientsFixtures();

}  // namespace mshift

#endif  // MSHIFT_CORPUS_H_
