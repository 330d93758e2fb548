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

#ifndef MSHIFT_JSON_IO_H_
#define MSHIFT_JSON_IO_H_

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "mshift/betti_table.h"
#include "mshift/ideal.h"
#include "mshift/linear_quotients.h"
#include "mshift/matroid.h"

namespace mshift {

using Json = nlohmann::json;

// Malformed or structurally invalid input document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses text as JSON, raising InputError with the parser message.
Json ParseJsonText(const std::string& text);
// Reads and parses a UTF-8 JSON file.
Json ReadJsonFile(const std::string& path);

// Accepts {"n":4,"bases":[[1,2],...]}, {"uniform":{"r":2,"n":4}},
// {"graphic":{"vertices":3,"edges":[[1,2],...]}} and
// {"transversal":{"n":3,"sets":[[1,2],...]}}.
// Throws InputError on bad shape and std::invalid_argument (carrying the
// exchange witness) when explicit bases do not form a matroid.
Matroid MatroidFromJson(const Json& doc);

// Accepts {"n":3,"generators":[[1,2],...]}. A {"n","bases"} document is
// read the same way without validating the bases, so non-matroidal families
// still load; constructor specs become their matroidal ideal.
MonomialIdeal IdealFromJson(const Json& doc);

Json ToJson(const SquarefreeMonomial& m);  // [1,2,3]
Json ToJson(const Matroid& m);
Json ToJson(const MonomialIdeal& ideal);
Json ToJson(const MatroidError& error);
Json ToJson(const LinearQuotientsViolation& violation);
Json BettiEntriesToJson(const std::vector<BettiEntry>& entries);
// {"entries":[{"i":1,"a":[1,2,3],"mult":2}, ...]}
Json ToJson(const BettiTable& table);
BettiTable BettiTableFromJson(const Json& doc, GroundSet ground);
Json ToJson(const VerificationReport& report);

}  // namespace mshift

#endif  // MSHIFT_JSON_IO_H_
