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

#include "mshift/ideal.h"

#include <algorithm>
#include <stdexcept>

namespace mshift {
namespace {

void RequireEquigenerated(const MonomialIdeal& ideal, const char* what) {
  if (!ideal.is_equigenerated()) {
    throw std::invalid_argument(std::string(what) +
                                " needs an ideal generated in a single "
                                "degree, got " +
                                ideal.ToString());
  }
}

}  // namespace

MonomialIdeal MonomialIdeal::Minimalize(
    GroundSet ground, std::vector<SquarefreeMonomial> monomials) {
  if (monomials.empty()) {
    throw std::invalid_argument("cannot minimalize an empty generating set");
  }
  for (const auto& m : monomials) {
    if (m.num_variables() != ground.size()) {
      throw std::invalid_argument("generator " + m.ToString() +
                                  " lives on a different ground set");
    }
  }
  std::sort(monomials.begin(), monomials.end(), LexGreater());
  monomials.erase(std::unique(monomials.begin(), monomials.end()),
                  monomials.end());
  std::vector<SquarefreeMonomial> minimal;
  for (const auto& m : monomials) {
    bool redundant = std::any_of(
        monomials.begin(), monomials.end(), [&](const SquarefreeMonomial& g) {
          return g != m && Divides(g, m);
        });
    if (!redundant) minimal.push_back(m);
  }
  return MonomialIdeal(ground, std::move(minimal));
}

MonomialIdeal MonomialIdeal::Zero(GroundSet ground) {
  return MonomialIdeal(ground, {});
}

bool MonomialIdeal::is_equigenerated() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const SquarefreeMonomial& g) {
                       return g.degree() == generators_.front().degree();
                     });
}

std::optional<int> MonomialIdeal::degree() const {
  if (is_zero() || !is_equigenerated()) return std::nullopt;
  return generators_.front().degree();
}

bool MonomialIdeal::Contains(const SquarefreeMonomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const SquarefreeMonomial& g) { return Divides(g, m); });
}

std::string MonomialIdeal::ToString() const {
  if (is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].ToString();
  }
  return out + ")";
}

MonomialIdeal IdealFromMatroid(const Matroid& m) {
  return MonomialIdeal::Minimalize(m.ground(), m.bases());
}

std::variant<Matroid, MatroidError> IsMatroidal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("the zero ideal has no generators to test");
  }
  RequireEquigenerated(ideal, "matroidality test");
  return Matroid::FromBases(ideal.ground(), ideal.generators());
}

GeneratorGraph BuildGeneratorGraph(const MonomialIdeal& ideal) {
  RequireEquigenerated(ideal, "generator graph");
  GeneratorGraph g;
  g.vertices = ideal.generators();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      // Compare against Rational(1): int == rational recurses in C++20.
      if (Distance(g.vertices[i], g.vertices[j]) == Rational(1)) {
        g.edges.emplace_back(i, j);
      }
    }
  }
  return g;
}

MonomialIdeal AdjacencyIdeal(const MonomialIdeal& ideal) {
  GeneratorGraph g = BuildGeneratorGraph(ideal);
  if (g.edges.empty()) return MonomialIdeal::Zero(ideal.ground());
  std::vector<SquarefreeMonomial> lcms;
  lcms.reserve(g.edges.size());
  for (auto [i, j] : g.edges) lcms.push_back(Lcm(g.vertices[i], g.vertices[j]));
  return MonomialIdeal::Minimalize(ideal.ground(), std::move(lcms));
}

}  // namespace mshift
