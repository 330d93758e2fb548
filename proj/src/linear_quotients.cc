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

#include "mshift/linear_quotients.h"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace mshift {

class LinearQuotientsBuilder {
 public:
  static LinearQuotientsOrder Make(MonomialIdeal ideal,
                                   std::vector<SquarefreeMonomial> order,
                                   std::vector<Subset> sets) {
    return LinearQuotientsOrder(std::move(ideal), std::move(order),
                                std::move(sets));
  }
};

namespace {

// Variables k with m_j / gcd(m_j, m) = x_k for some predecessor m_j.
std::uint32_t SetMask(const SquarefreeMonomial& m,
                      const std::vector<SquarefreeMonomial>& predecessors) {
  std::uint32_t set = 0;
  for (const auto& p : predecessors) {
    std::uint32_t quotient = p.mask() & ~m.mask();
    if (std::popcount(quotient) == 1) set |= quotient;
  }
  return set;
}

// Index of the first predecessor whose colon generator avoids `set`.
std::optional<std::size_t> FirstNonLinear(
    const SquarefreeMonomial& m,
    const std::vector<SquarefreeMonomial>& predecessors, std::uint32_t set) {
  for (std::size_t j = 0; j < predecessors.size(); ++j) {
    if ((predecessors[j].mask() & ~m.mask() & set) == 0) return j;
  }
  return std::nullopt;
}

class OrderSearch {
 public:
  explicit OrderSearch(const std::vector<SquarefreeMonomial>& gens)
      : gens_(gens) {}

  bool Run(std::vector<std::size_t>& picked, std::uint32_t used) {
    if (picked.size() == gens_.size()) return true;
    if (dead_.count(used)) return false;
    std::vector<SquarefreeMonomial> prefix;
    for (std::size_t p : picked) prefix.push_back(gens_[p]);
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      if (used >> g & 1u) continue;
      if (FirstNonLinear(gens_[g], prefix, SetMask(gens_[g], prefix))) continue;
      picked.push_back(g);
      if (Run(picked, used | (1u << g))) return true;
      picked.pop_back();
    }
    dead_.insert(used);
    return false;
  }

 private:
  const std::vector<SquarefreeMonomial>& gens_;
  std::unordered_set<std::uint32_t> dead_;
};

std::string Indent(const std::string& s) { return "  " + s; }

}  // namespace

std::string LinearQuotientsViolation::Describe() const {
  return "no linear quotients: (m_1..m_" + std::to_string(position) +
         "):(m_" + std::to_string(position + 1) + "=" + generator.ToString() +
         ") needs the non-variable generator " +
         Difference(predecessor_generator, generator).ToString() +
         " coming from m_" + std::to_string(predecessor + 1) + "=" +
         predecessor_generator.ToString();
}

std::vector<SquarefreeMonomial> OrderLex(const MonomialIdeal& ideal) {
  std::vector<SquarefreeMonomial> order = ideal.generators();
  std::sort(order.begin(), order.end(), LexGreater());
  return order;
}

std::variant<LinearQuotientsOrder, LinearQuotientsViolation> ComputeSets(
    const MonomialIdeal& ideal, const std::vector<SquarefreeMonomial>& order) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("linear quotients of the zero ideal");
  }
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end(), LexGreater());
    if (sorted != ideal.generators()) {
      throw std::invalid_argument(
          "order is not a permutation of the minimal generators of " +
          ideal.ToString());
    }
  }
  std::vector<Subset> sets;
  std::vector<SquarefreeMonomial> prefix;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::uint32_t set = SetMask(order[i], prefix);
    if (auto j = FirstNonLinear(order[i], prefix, set)) {
      return LinearQuotientsViolation{i, *j, order[i], order[*j]};
    }
    sets.push_back(Subset::FromMask(ideal.ground(), set));
    prefix.push_back(order[i]);
  }
  return LinearQuotientsBuilder::Make(ideal, order, std::move(sets));
}

std::optional<LinearQuotientsOrder> FindLinearQuotientsOrder(
    const MonomialIdeal& ideal) {
  if (ideal.size() > 24) {
    throw std::invalid_argument("order search limited to 24 generators");
  }
  auto lex = OrderLex(ideal);
  OrderSearch search(lex);
  std::vector<std::size_t> picked;
  if (!search.Run(picked, 0)) return std::nullopt;
  std::vector<SquarefreeMonomial> order;
  for (std::size_t p : picked) order.push_back(lex[p]);
  return std::get<LinearQuotientsOrder>(ComputeSets(ideal, order));
}

int Projdim(const LinearQuotientsOrder& lq) {
  int best = 0;
  for (const auto& s : lq.sets()) best = std::max(best, s.degree());
  return best;
}

ShiftSlice Shifts(const LinearQuotientsOrder& lq, int ell) {
  const GroundSet ground = lq.ideal().ground();
  ShiftSlice slice{ell, MonomialIdeal::Zero(ground), {}};
  if (ell < 0 || ell > Projdim(lq)) return slice;

  std::map<SquarefreeMonomial, std::int64_t, LexGreater> counts;
  for (std::size_t i = 0; i < lq.order().size(); ++i) {
    const std::uint32_t base = lq.order()[i].mask();
    const std::uint32_t set = lq.sets()[i].mask();
    // Every submask of set(m) of size ell, including the empty one.
    std::uint32_t sub = set;
    while (true) {
      if (std::popcount(sub) == ell) {
        ++counts[SquarefreeMonomial::FromMask(ground, base | sub)];
      }
      if (sub == 0) break;
      sub = (sub - 1) & set;
    }
  }
  std::vector<SquarefreeMonomial> shifts;
  for (const auto& [a, mult] : counts) {
    slice.betti.push_back({ell, a, mult});
    shifts.push_back(a);
  }
  slice.ideal = MonomialIdeal::Minimalize(ground, std::move(shifts));
  return slice;
}

BettiTable BettiTableFromOrder(const LinearQuotientsOrder& lq) {
  BettiTable table;
  for (int ell = 0; ell <= Projdim(lq); ++ell) {
    for (const auto& e : Shifts(lq, ell).betti) {
      table.Add(e.homological_degree, e.multidegree, e.multiplicity);
    }
  }
  return table;
}

MonomialIdeal IteratedAdjacency(const MonomialIdeal& ideal, int times) {
  if (times < 0) throw std::invalid_argument("negative iteration count");
  MonomialIdeal current = ideal;
  for (int t = 0; t < times && !current.is_zero(); ++t) {
    current = AdjacencyIdeal(current);
  }
  return current;
}

bool VerificationReport::passed() const {
  if (!applicable || lex_failure) return false;
  if (oracle_match && !*oracle_match) return false;
  return std::all_of(levels.begin(), levels.end(),
                     [](const LevelCheck& l) { return l.passed(); });
}

VerificationReport VerifyTheorem(const MonomialIdeal& ideal) {
  VerificationReport report{ideal};
  if (ideal.is_zero() || !ideal.is_equigenerated()) {
    report.inapplicable = MatroidError{MatroidError::Kind::kUnequalCardinality};
    if (!ideal.is_zero()) {
      auto gens = ideal.generators();
      auto odd = std::find_if(gens.begin(), gens.end(), [&](const auto& g) {
        return g.degree() != gens.front().degree();
      });
      report.inapplicable->first = gens.front();
      report.inapplicable->second = *odd;
    } else {
      report.inapplicable->kind = MatroidError::Kind::kEmpty;
    }
    return report;
  }
  auto matroid = IsMatroidal(ideal);
  if (auto* err = std::get_if<MatroidError>(&matroid)) {
    report.inapplicable = *err;
    return report;
  }
  report.applicable = true;

  auto computed = ComputeSets(ideal, OrderLex(ideal));
  if (auto* violation = std::get_if<LinearQuotientsViolation>(&computed)) {
    report.lex_failure = *violation;
    return report;
  }
  const auto& lq = std::get<LinearQuotientsOrder>(computed);
  report.projdim = Projdim(lq);

  std::vector<ShiftSlice> slices;
  for (int ell = 0; ell <= report.projdim; ++ell) {
    slices.push_back(Shifts(lq, ell));
  }
  MonomialIdeal iterated = ideal;
  for (int ell = 0; ell <= report.projdim; ++ell) {
    const ShiftSlice& slice = slices[ell];
    if (ell > 0) iterated = IteratedAdjacency(iterated, 1);
    LevelCheck level{ell,   slice.ideal,          slice.betti, false,
                     {},    slice.ideal == iterated, iterated,   {}};
    if (!slice.ideal.is_zero()) {
      auto shifted = IsMatroidal(slice.ideal);
      level.matroidal = std::holds_alternative<Matroid>(shifted);
      if (!level.matroidal) {
        level.matroidal_witness = std::get<MatroidError>(shifted);
      }
    }
    if (ell < report.projdim && !slice.ideal.is_zero()) {
      level.next_equals_adjacency =
          (slices[ell + 1].ideal == AdjacencyIdeal(slice.ideal));
    } else if (ell < report.projdim) {
      level.next_equals_adjacency = false;
    }
    report.levels.push_back(std::move(level));
  }
  return report;
}

std::string RenderReport(const VerificationReport& report) {
  std::ostringstream out;
  out << "ideal " << report.ideal.ToString() << "\n";
  if (!report.applicable) {
    out << Indent("not matroidal: ")
        << (report.inapplicable ? report.inapplicable->Describe() : "?")
        << "\n";
    return out.str();
  }
  if (report.lex_failure) {
    out << Indent("lex order: ") << report.lex_failure->Describe() << "\n";
    out << "result FAIL\n";
    return out.str();
  }
  out << Indent("projdim ") << report.projdim << "\n";
  out << Indent("ell  matroidal  =A^ell(I)  J_{ell+1}=A(J_ell)  J_ell\n");
  for (const auto& l : report.levels) {
    out << Indent("") << l.ell << "    " << (l.matroidal ? "yes" : "NO ")
        << "        " << (l.equals_iterated_adjacency ? "yes" : "NO ")
        << "        "
        << (l.next_equals_adjacency ? (*l.next_equals_adjacency ? "yes" : "NO ")
                                    : "-  ")
        << "                " << l.shift_ideal.ToString() << "\n";
    if (l.matroidal_witness) {
      out << Indent(Indent(l.matroidal_witness->Describe())) << "\n";
    }
    if (!l.equals_iterated_adjacency) {
      out << Indent(Indent("iterated adjacency gives " +
                           l.iterated_adjacency.ToString()))
          << "\n";
    }
  }
  if (report.oracle_match) {
    out << Indent("oracle betti table ")
        << (*report.oracle_match ? "matches" : "DIFFERS") << "\n";
  }
  out << "result " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace mshift
