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

#include "mshift/json_io.h"

#include <fstream>
#include <sstream>

namespace mshift {
namespace {

const Json& Field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

int IntField(const Json& doc, const char* key) {
  const Json& v = Field(doc, key);
  if (!v.is_number_integer()) {
    throw InputError(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

GroundSet GroundField(const Json& doc) {
  try {
    return GroundSet(IntField(doc, "n"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

SquarefreeMonomial MonomialFromJson(GroundSet ground, const Json& v) {
  if (!v.is_array()) throw InputError("expected an index list like [1,2]");
  std::vector<int> indices;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw InputError("indices must be integers");
    indices.push_back(x.get<int>());
  }
  try {
    return SquarefreeMonomial::FromIndices(ground, indices);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::vector<SquarefreeMonomial> MonomialList(GroundSet ground, const Json& v) {
  if (!v.is_array()) throw InputError("expected a list of index lists");
  std::vector<SquarefreeMonomial> out;
  for (const auto& x : v) out.push_back(MonomialFromJson(ground, x));
  return out;
}

Json OptionalBool(const std::optional<bool>& b) {
  return b ? Json(*b) : Json(nullptr);
}

}  // namespace

Json ParseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseJsonText(buffer.str());
}

Matroid MatroidFromJson(const Json& doc) {
  if (!doc.is_object()) throw InputError("matroid document must be an object");
  try {
    if (doc.contains("uniform")) {
      const Json& u = doc.at("uniform");
      return Uniform(IntField(u, "r"), GroundField(u));
    }
    if (doc.contains("graphic")) {
      const Json& g = doc.at("graphic");
      const Json& edges = Field(g, "edges");
      if (!edges.is_array()) throw InputError("\"edges\" must be a list");
      std::vector<std::pair<int, int>> list;
      for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
          throw InputError("each edge must be a pair of vertex numbers");
        }
        list.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
      return Graphic(IntField(g, "vertices"), list);
    }
    if (doc.contains("transversal")) {
      const Json& t = doc.at("transversal");
      GroundSet ground = GroundField(t);
      return Transversal(ground, MonomialList(ground, Field(t, "sets")));
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  GroundSet ground = GroundField(doc);
  return Matroid::FromBasesOrThrow(ground,
                                   MonomialList(ground, Field(doc, "bases")));
}

MonomialIdeal IdealFromJson(const Json& doc) {
  if (!doc.is_object()) throw InputError("ideal document must be an object");
  const char* key = doc.contains("generators") ? "generators"
                    : doc.contains("bases")    ? "bases"
                                               : nullptr;
  // Constructor specs describe a matroid; take its ideal.
  if (key == nullptr) return IdealFromMatroid(MatroidFromJson(doc));
  GroundSet ground = GroundField(doc);
  auto gens = MonomialList(ground, doc.at(key));
  if (gens.empty()) return MonomialIdeal::Zero(ground);
  return MonomialIdeal::Minimalize(ground, std::move(gens));
}

Json ToJson(const SquarefreeMonomial& m) { return Json(m.indices()); }

Json ToJson(const Matroid& m) {
  Json bases = Json::array();
  for (const auto& b : m.bases()) bases.push_back(ToJson(b));
  return {{"n", m.ground().size()}, {"bases", bases}};
}

Json ToJson(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(ToJson(g));
  return {{"n", ideal.ground().size()}, {"generators", gens}};
}

Json ToJson(const MatroidError& error) {
  Json out;
  switch (error.kind) {
    case MatroidError::Kind::kEmpty:
      out["kind"] = "empty";
      break;
    case MatroidError::Kind::kUnequalCardinality:
      out["kind"] = "unequal_cardinality";
      break;
    case MatroidError::Kind::kExchange:
      out["kind"] = "exchange";
      out["b1"] = error.element;
      break;
  }
  if (error.first) out["B1"] = ToJson(*error.first);
  if (error.second) out["B2"] = ToJson(*error.second);
  out["message"] = error.Describe();
  return out;
}

Json ToJson(const LinearQuotientsViolation& violation) {
  return {{"position", violation.position + 1},
          {"predecessor", violation.predecessor + 1},
          {"generator", ToJson(violation.generator)},
          {"predecessor_generator", ToJson(violation.predecessor_generator)},
          {"message", violation.Describe()}};
}

Json BettiEntriesToJson(const std::vector<BettiEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    out.push_back({{"a", ToJson(e.multidegree)}, {"mult", e.multiplicity}});
  }
  return out;
}

Json ToJson(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& e : table.Entries()) {
    entries.push_back({{"i", e.homological_degree},
                       {"a", ToJson(e.multidegree)},
                       {"mult", e.multiplicity}});
  }
  return {{"entries", entries}};
}

BettiTable BettiTableFromJson(const Json& doc, GroundSet ground) {
  BettiTable table;
  const Json& entries = Field(doc, "entries");
  if (!entries.is_array()) throw InputError("\"entries\" must be a list");
  for (const auto& e : entries) {
    table.Add(IntField(e, "i"), MonomialFromJson(ground, Field(e, "a")),
              IntField(e, "mult"));
  }
  return table;
}

Json ToJson(const VerificationReport& report) {
  Json out;
  out["ideal"] = ToJson(report.ideal);
  out["matroidal"] = report.applicable;
  if (report.inapplicable) out["witness"] = ToJson(*report.inapplicable);
  if (report.lex_failure) out["lex_failure"] = ToJson(*report.lex_failure);
  if (report.applicable && !report.lex_failure) {
    out["projdim"] = report.projdim;
  }
  Json levels = Json::array();
  for (const auto& l : report.levels) {
    Json level = {{"ell", l.ell},
                  {"J", ToJson(l.shift_ideal)["generators"]},
                  {"betti", BettiEntriesToJson(l.betti)},
                  {"matroidal", l.matroidal},
                  {"equals_iterated_adjacency", l.equals_iterated_adjacency},
                  {"next_equals_adjacency",
                   OptionalBool(l.next_equals_adjacency)}};
    if (l.matroidal_witness) level["witness"] = ToJson(*l.matroidal_witness);
    levels.push_back(std::move(level));
  }
  out["levels"] = levels;
  out["oracle_match"] = OptionalBool(report.oracle_match);
  out["passed"] = report.passed();
  return out;
}

}  // namespace mshift
