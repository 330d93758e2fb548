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

#ifndef MSHIFT_BETTI_TABLE_H_
#define MSHIFT_BETTI_TABLE_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mshift/monomial.h"

namespace mshift {

struct BettiEntry {
  int homological_degree;
  SquarefreeMonomial multidegree;
  std::int64_t multiplicity;

  bool operator==(const BettiEntry&) const = default;
};

// Multigraded Betti numbers beta_{i,a}, zero entries omitted. Entries are
// kept sorted by homological degree, then descending lex multidegree.
class BettiTable {
 public:
  BettiTable() = default;

  // Adds `multiplicity` to beta_{i,a}. Zero additions are ignored.
  void Add(int homological_degree, const SquarefreeMonomial& multidegree,
           std::int64_t multiplicity);

  std::int64_t Get(int homological_degree,
                   const SquarefreeMonomial& multidegree) const;
  std::vector<BettiEntry> Entries() const;
  std::vector<BettiEntry> Slice(int homological_degree) const;
  // Total Betti numbers beta_0, .., beta_projdim.
  std::vector<std::int64_t> Totals() const;
  // Largest i with a non-zero entry; -1 for an empty table.
  int projdim() const;
  bool empty() const { return entries_.empty(); }

  bool operator==(const BettiTable&) const = default;

 private:
  struct KeyLess {
    bool operator()(const std::pair<int, SquarefreeMonomial>& a,
                    const std::pair<int, SquarefreeMonomial>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return a.second > b.second;
    }
  };
  std::map<std::pair<int, SquarefreeMonomial>, std::int64_t, KeyLess> entries_;
};

// Entry-wise comparison: one line per (i, a) where the tables disagree.
struct BettiDifference {
  int homological_degree;
  SquarefreeMonomial multidegree;
  std::int64_t left;
  std::int64_t right;
};
std::vector<BettiDifference> Diff(const BettiTable& left,
                                  const BettiTable& right);

// Totals line plus one row per entry.
std::string RenderBettiTable(const BettiTable& table);

}  // namespace mshift

#endif  // MSHIFT_BETTI_TABLE_H_
