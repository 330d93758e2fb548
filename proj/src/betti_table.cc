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

#include "mshift/betti_table.h"

#include <algorithm>
#include <sstream>

namespace mshift {

void BettiTable::Add(int homological_degree,
                     const SquarefreeMonomial& multidegree,
                     std::int64_t multiplicity) {
  if (multiplicity == 0) return;
  auto& slot = entries_[{homological_degree, multidegree}];
  slot += multiplicity;
  if (slot == 0) entries_.erase({homological_degree, multidegree});
}

std::int64_t BettiTable::Get(int homological_degree,
                             const SquarefreeMonomial& multidegree) const {
  auto it = entries_.find({homological_degree, multidegree});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<BettiEntry> BettiTable::Entries() const {
  std::vector<BettiEntry> out;
  for (const auto& [key, mult] : entries_) {
    out.push_back({key.first, key.second, mult});
  }
  return out;
}

std::vector<BettiEntry> BettiTable::Slice(int homological_degree) const {
  std::vector<BettiEntry> out;
  for (const auto& [key, mult] : entries_) {
    if (key.first == homological_degree) {
      out.push_back({key.first, key.second, mult});
    }
  }
  return out;
}

std::vector<std::int64_t> BettiTable::Totals() const {
  std::vector<std::int64_t> totals(projdim() + 1, 0);
  for (const auto& [key, mult] : entries_) totals[key.first] += mult;
  return totals;
}

int BettiTable::projdim() const {
  return entries_.empty() ? -1 : entries_.rbegin()->first.first;
}

std::vector<BettiDifference> Diff(const BettiTable& left,
                                  const BettiTable& right) {
  std::vector<BettiDifference> out;
  for (const auto& e : left.Entries()) {
    std::int64_t r = right.Get(e.homological_degree, e.multidegree);
    if (r != e.multiplicity) {
      out.push_back({e.homological_degree, e.multidegree, e.multiplicity, r});
    }
  }
  for (const auto& e : right.Entries()) {
    if (left.Get(e.homological_degree, e.multidegree) == 0) {
      out.push_back({e.homological_degree, e.multidegree, 0, e.multiplicity});
    }
  }
  return out;
}

std::string RenderBettiTable(const BettiTable& table) {
  std::ostringstream out;
  out << "totals:";
  for (auto t : table.Totals()) out << ' ' << t;
  out << '\n';
  for (const auto& e : table.Entries()) {
    out << "  beta_{" << e.homological_degree << ", "
        << e.multidegree.ToString() << "} = " << e.multiplicity << '\n';
  }
  return out.str();
}

}  // namespace mshift
