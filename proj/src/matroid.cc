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

#include "mshift/matroid.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace mshift {
namespace {

void SortUnique(std::vector<Subset>& v) {
  std::sort(v.begin(), v.end(), LexGreater());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

int LowestIndex(std::uint32_t mask) { return std::countr_zero(mask) + 1; }

// Elements of `mask` as 1-based indices, ascending.
std::vector<int> Elements(std::uint32_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(LowestIndex(mask));
    mask &= mask - 1;
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Unite(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Kuhn's augmenting path step for the element/set bipartite graph.
bool Augment(int element, const std::vector<Subset>& sets,
             std::vector<int>& set_owner, std::vector<bool>& visited) {
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (!sets[s].contains(element) || visited[s]) continue;
    visited[s] = true;
    if (set_owner[s] == 0 ||
        Augment(set_owner[s], sets, set_owner, visited)) {
      set_owner[s] = element;
      return true;
    }
  }
  return false;
}

// True iff the elements of `candidate` can be matched to distinct sets.
bool IsPartialTransversal(const Subset& candidate,
                          const std::vector<Subset>& sets) {
  std::vector<int> set_owner(sets.size(), 0);
  for (int e : candidate.indices()) {
    std::vector<bool> visited(sets.size(), false);
    if (!Augment(e, sets, set_owner, visited)) return false;
  }
  return true;
}

}  // namespace

std::string MatroidError::Describe() const {
  switch (kind) {
    case Kind::kEmpty:
      return "empty family of bases";
    case Kind::kUnequalCardinality:
      return "bases of unequal cardinality: " + first->ToString() + " and " +
             second->ToString();
    case Kind::kExchange:
      return "exchange property fails for B1=" + first->ToString() +
             ", B2=" + second->ToString() + ", b1=" +
             std::to_string(element) +
             ": no b2 in B2\\B1 makes B1-b1+b2 a basis";
  }
  return "unknown matroid error";
}

Matroid::Matroid(GroundSet ground, std::vector<Subset> bases)
    : ground_(ground),
      rank_(bases.front().degree()),
      bases_(std::move(bases)),
      lookup_(bases_.begin(), bases_.end()) {}

std::variant<Matroid, MatroidError> Matroid::FromBases(
    GroundSet ground, std::vector<Subset> candidates) {
  if (candidates.empty()) return MatroidError{MatroidError::Kind::kEmpty};
  for (const auto& c : candidates) {
    if (c.num_variables() != ground.size()) {
      throw std::invalid_argument("basis " + c.ToString() +
                                  " lives on a different ground set");
    }
  }
  SortUnique(candidates);
  const int rank = candidates.front().degree();
  for (const auto& c : candidates) {
    if (c.degree() != rank) {
      return MatroidError{MatroidError::Kind::kUnequalCardinality,
                          candidates.front(), c};
    }
  }
  std::unordered_set<Subset> lookup(candidates.begin(), candidates.end());
  for (const auto& b1 : candidates) {
    for (const auto& b2 : candidates) {
      std::uint32_t out_mask = b1.mask() & ~b2.mask();
      std::uint32_t in_mask = b2.mask() & ~b1.mask();
      for (int x : Elements(out_mask)) {
        bool found = false;
        for (int y : Elements(in_mask)) {
          if (lookup.count(b1.without(x).with(y))) {
            found = true;
            break;
          }
        }
        if (!found) {
          return MatroidError{MatroidError::Kind::kExchange, b1, b2, x};
        }
      }
    }
  }
  return Matroid(ground, std::move(candidates));
}

Matroid Matroid::FromBasesOrThrow(GroundSet ground,
                                  std::vector<Subset> candidates) {
  auto result = FromBases(ground, std::move(candidates));
  if (auto* err = std::get_if<MatroidError>(&result)) {
    throw std::invalid_argument("not a matroid: " + err->Describe());
  }
  return std::get<Matroid>(std::move(result));
}

bool Matroid::IsBasis(const Subset& s) const { return lookup_.count(s) > 0; }

std::optional<std::size_t> Matroid::IndexOf(const Subset& basis) const {
  auto it = std::lower_bound(bases_.begin(), bases_.end(), basis, LexGreater());
  if (it == bases_.end() || *it != basis) return std::nullopt;
  return static_cast<std::size_t>(it - bases_.begin());
}

Matroid Uniform(int rank, GroundSet ground) {
  if (rank <= 0 || rank > ground.size()) {
    throw std::invalid_argument("uniform matroid rank " + std::to_string(rank) +
                                " outside 1.." + std::to_string(ground.size()));
  }
  return Matroid::FromBasesOrThrow(ground, SubsetsOfSize(ground, rank));
}

Matroid Graphic(int num_vertices,
                const std::vector<std::pair<int, int>>& edges) {
  if (num_vertices < 1) throw std::invalid_argument("graph needs a vertex");
  if (edges.empty()) throw std::invalid_argument("graph has no edges");
  if (edges.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw std::invalid_argument("too many edges for the ground-set cap");
  }
  for (auto [u, v] : edges) {
    if (u < 1 || u > num_vertices || v < 1 || v > num_vertices) {
      throw std::invalid_argument("edge endpoint outside 1.." +
                                  std::to_string(num_vertices));
    }
  }
  GroundSet ground(static_cast<int>(edges.size()));
  UnionFind components(num_vertices);
  for (auto [u, v] : edges) components.Unite(u - 1, v - 1);
  for (int v = 1; v < num_vertices; ++v) {
    if (components.Find(v) != components.Find(0)) {
      throw std::invalid_argument("graph is disconnected; no spanning tree");
    }
  }
  std::vector<Subset> trees;
  for (const auto& candidate : SubsetsOfSize(ground, num_vertices - 1)) {
    UnionFind forest(num_vertices);
    bool acyclic = true;
    for (int e : candidate.indices()) {
      auto [u, v] = edges[e - 1];
      if (!forest.Unite(u - 1, v - 1)) {
        acyclic = false;
        break;
      }
    }
    if (acyclic) trees.push_back(candidate);
  }
  return Matroid::FromBasesOrThrow(ground, std::move(trees));
}

Matroid Transversal(GroundSet ground, const std::vector<Subset>& sets) {
  if (sets.empty()) throw std::invalid_argument("empty set system");
  std::uint32_t support = 0;
  for (const auto& s : sets) {
    if (s.num_variables() != ground.size()) {
      throw std::invalid_argument("set " + s.ToString() +
                                  " lives on a different ground set");
    }
    support |= s.mask();
  }
  const std::vector<int> elements = Elements(support);
  if (elements.size() > 24) {
    throw std::invalid_argument(
        "transversal enumeration limited to 24 covered elements");
  }
  // Brute force over subsets of the covered elements.
  std::vector<Subset> best;
  int best_size = 0;
  const std::uint32_t count = 1u << elements.size();
  for (std::uint32_t pick = 0; pick < count; ++pick) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (pick >> i & 1u) mask |= 1u << (elements[i] - 1);
    }
    int size = std::popcount(mask);
    if (size < best_size || size > static_cast<int>(sets.size())) continue;
    Subset candidate = Subset::FromMask(ground, mask);
    if (!IsPartialTransversal(candidate, sets)) continue;
    if (size > best_size) {
      best.clear();
      best_size = size;
    }
    best.push_back(candidate);
  }
  return Matroid::FromBasesOrThrow(ground, std::move(best));
}

bool CheckSymmetricExchange(const Matroid& m) {
  for (const auto& b1 : m.bases()) {
    for (const auto& b2 : m.bases()) {
      std::uint32_t in_mask = b2.mask() & ~b1.mask();
      for (int x : Elements(b1.mask() & ~b2.mask())) {
        bool found = false;
        for (int y : Elements(in_mask)) {
          if (m.IsBasis(b1.without(x).with(y)) &&
              m.IsBasis(b2.without(y).with(x))) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool BasisGraph::IsConnected() const {
  if (vertices.empty()) return true;
  std::vector<bool> seen(vertices.size(), false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t v : adjacency[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == vertices.size();
}

bool BasisGraph::Adjacent(std::size_t u, std::size_t v) const {
  const auto& row = adjacency.at(u);
  return std::find(row.begin(), row.end(), v) != row.end();
}

BasisGraph BuildBasisGraph(const Matroid& m) {
  BasisGraph g;
  g.vertices = m.bases();
  g.adjacency.resize(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      std::uint32_t out_mask = g.vertices[i].mask() & ~g.vertices[j].mask();
      std::uint32_t in_mask = g.vertices[j].mask() & ~g.vertices[i].mask();
      if (std::popcount(out_mask) == 1 && std::popcount(in_mask) == 1) {
        g.edges.push_back({i, j, LowestIndex(out_mask), LowestIndex(in_mask)});
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
    }
  }
  return g;
}

DistanceTwoNeighbors FindDistanceTwoNeighbors(const Matroid& m,
                                              const Subset& first,
                                              const Subset& second) {
  if (!m.IsBasis(first) || !m.IsBasis(second)) {
    throw std::invalid_argument("distance-two query on a non-basis");
  }
  // In a basis graph the path distance equals |first \ second|.
  auto out = Elements(first.mask() & ~second.mask());
  auto in = Elements(second.mask() & ~first.mask());
  if (out.size() != 2) {
    throw std::invalid_argument(first.ToString() + " and " +
                                second.ToString() +
                                " are not at basis-graph distance two");
  }
  DistanceTwoNeighbors result{out[0], out[1], in[0], in[1], {}, std::nullopt};
  for (int e : out) {
    for (int f : in) {
      Subset candidate = first.without(e).with(f);
      if (m.IsBasis(candidate)) result.neighbors.push_back({candidate, e, f});
    }
  }
  for (const auto& c1 : result.neighbors) {
    for (const auto& c2 : result.neighbors) {
      if (c1.pivot_out == result.e1 && c2.pivot_out == result.e2 &&
          c1.pivot_in != c2.pivot_in) {
        result.witness_pair = std::make_pair(c1, c2);
        return result;
      }
    }
  }
  return result;
}

}  // namespace mshift
