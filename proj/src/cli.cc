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

#include "mshift/cli.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "mshift/betti_oracle.h"
#include "mshift/corpus.h"
#include "mshift/ideal.h"
#include "mshift/json_io.h"
#include "mshift/linear_quotients.h"
#include "mshift/matroid.h"

namespace mshift {
namespace {

struct CliError {
  int status;
  std::string message;
};

struct RunConfig {
  std::string command;
  std::string ideal;
  std::string uniform;
  std::string graphic;
  std::string transversal;
  std::string order;
  std::string ell;
  std::string corpus;
  std::string emit = "matroid";
  bool oracle = false;
  bool json = false;
  int max_n = 6;
};

struct EllRange {
  int first;
  int last;
};

std::string Trim(const std::string& s) {
  auto begin = std::find_if_not(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c);
  });
  auto end = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) {
               return std::isspace(c);
             }).base();
  return begin < end ? std::string(begin, end) : std::string();
}

int ParseInt(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw CliError{kExitBadInput, "bad " + what + " '" + text + "'"};
  }
  return value;
}

// "a" or "a..b".
std::optional<EllRange> ParseEll(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = ParseInt(text, "--ell");
    return EllRange{v, v};
  }
  EllRange r{ParseInt(text.substr(0, dots), "--ell"),
             ParseInt(text.substr(dots + 2), "--ell")};
  if (r.first > r.last) {
    throw CliError{kExitBadInput, "empty --ell range '" + text + "'"};
  }
  return r;
}

// Either inline JSON (starting with '{' or '[') or a file path.
Json LoadDocument(const std::string& arg) {
  std::string t = Trim(arg);
  if (!t.empty() && (t.front() == '{' || t.front() == '[')) {
    return ParseJsonText(t);
  }
  return ReadJsonFile(t);
}

Json Wrap(const char* key, Json doc) {
  if (doc.is_object() && doc.contains(key)) return doc;
  return Json{{key, std::move(doc)}};
}

// The single input document named by the input flags, normalized to the
// matroid/ideal JSON schemas.
Json InputDocument(const RunConfig& c) {
  int given = !c.ideal.empty() + !c.uniform.empty() + !c.graphic.empty() +
              !c.transversal.empty();
  if (given != 1) {
    throw CliError{kExitBadInput,
                   "give exactly one of --ideal, --uniform, --graphic, "
                   "--transversal"};
  }
  if (!c.uniform.empty()) {
    auto comma = c.uniform.find(',');
    if (comma == std::string::npos) {
      throw CliError{kExitBadInput, "--uniform expects r,n"};
    }
    return Json{{"uniform",
                 {{"r", ParseInt(Trim(c.uniform.substr(0, comma)), "rank")},
                  {"n", ParseInt(Trim(c.uniform.substr(comma + 1)), "n")}}}};
  }
  if (!c.graphic.empty()) return Wrap("graphic", LoadDocument(c.graphic));
  if (!c.transversal.empty()) {
    return Wrap("transversal", LoadDocument(c.transversal));
  }
  return LoadDocument(c.ideal);
}

MonomialIdeal LoadIdeal(const RunConfig& c) {
  try {
    return IdealFromJson(InputDocument(c));
  } catch (const std::invalid_argument& e) {
    throw CliError{kExitBadInput, e.what()};
  }
}

void RequireEquigenerated(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    throw CliError{kExitNoLinearQuotients, "input is the zero ideal"};
  }
  if (!ideal.is_equigenerated()) {
    throw CliError{kExitNoLinearQuotients,
                   "ideal " + ideal.ToString() +
                       " is not generated in a single degree"};
  }
}

std::vector<SquarefreeMonomial> ParseOrder(const RunConfig& c,
                                           const MonomialIdeal& ideal) {
  Json doc = LoadDocument(c.order);
  if (!doc.is_array()) throw CliError{kExitBadInput, "--order must be a list"};
  std::vector<SquarefreeMonomial> order;
  try {
    for (const auto& g : doc) {
      order.push_back(
          SquarefreeMonomial::FromIndices(ideal.ground(), g.get<std::vector<int>>()));
    }
  } catch (const std::exception& e) {
    throw CliError{kExitBadInput, std::string("bad --order: ") + e.what()};
  }
  return order;
}

// Linear-quotients data for the requested order (descending lex unless
// --order is given).
LinearQuotientsOrder RequireLinearQuotients(const RunConfig& c,
                                            const MonomialIdeal& ideal) {
  std::vector<SquarefreeMonomial> order =
      c.order.empty() ? OrderLex(ideal) : ParseOrder(c, ideal);
  std::variant<LinearQuotientsOrder, LinearQuotientsViolation> result =
      LinearQuotientsViolation{0, 0, ideal.generators().front(),
                               ideal.generators().front()};
  try {
    result = ComputeSets(ideal, order);
  } catch (const std::invalid_argument& e) {
    throw CliError{kExitBadInput, e.what()};
  }
  if (auto* v = std::get_if<LinearQuotientsViolation>(&result)) {
    throw CliError{kExitNoLinearQuotients, v->Describe()};
  }
  return std::get<LinearQuotientsOrder>(std::move(result));
}

EllRange ClampEll(const RunConfig& c, int low, int high, std::ostream& err) {
  auto requested = ParseEll(c.ell);
  if (!requested) return {low, high};
  EllRange r = *requested;
  EllRange clamped{std::clamp(r.first, low, high), std::clamp(r.last, low, high)};
  if (clamped.first != r.first || clamped.last != r.last) {
    err << "warning: --ell " << r.first << ".." << r.last << " clamped to "
        << clamped.first << ".." << clamped.last << "\n";
  }
  return clamped;
}

std::string Join(const std::vector<Subset>& subsets) {
  std::string out;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (i) out += ", ";
    out += "{";
    auto idx = subsets[i].indices();
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(idx[k]);
    }
    out += "}";
  }
  return out;
}

int CmdShifts(const RunConfig& c, std::ostream& out, std::ostream& err) {
  MonomialIdeal ideal = LoadIdeal(c);
  RequireEquigenerated(ideal);
  LinearQuotientsOrder lq = RequireLinearQuotients(c, ideal);
  const int projdim = Projdim(lq);
  EllRange range = ClampEll(c, 0, projdim, err);

  Json slices = Json::array();
  std::ostringstream text;
  text << "ideal " << ideal.ToString() << "\n";
  text << "order";
  for (std::size_t i = 0; i < lq.order().size(); ++i) {
    text << (i ? ", " : " ") << lq.order()[i].ToString() << " set={"
         << Join({lq.sets()[i]}).substr(1);
  }
  text << "\nprojdim " << projdim << "\n";
  for (int ell = range.first; ell <= range.last; ++ell) {
    ShiftSlice s = Shifts(lq, ell);
    slices.push_back({{"ell", ell},
                      {"J", ToJson(s.ideal)["generators"]},
                      {"betti", BettiEntriesToJson(s.betti)}});
    text << "J_" << ell << " = " << s.ideal.ToString() << "\n";
    for (const auto& e : s.betti) {
      text << "  beta_{" << ell << ", " << e.multidegree.ToString()
           << "} = " << e.multiplicity << "\n";
    }
  }
  if (c.json) {
    Json order = Json::array(), sets = Json::array();
    for (const auto& m : lq.order()) order.push_back(ToJson(m));
    for (const auto& s : lq.sets()) sets.push_back(ToJson(s));
    out << Json{{"ideal", ToJson(ideal)},
                {"order", order},
                {"sets", sets},
                {"projdim", projdim},
                {"shifts", slices}}
               .dump(2)
        << "\n";
  } else {
    out << text.str();
  }
  return kExitOk;
}

int CmdAdjacency(const RunConfig& c, std::ostream& out, std::ostream& err) {
  MonomialIdeal ideal = LoadIdeal(c);
  RequireEquigenerated(ideal);
  auto requested = ParseEll(c.ell).value_or(EllRange{1, 1});
  if (requested.first < 0) {
    err << "warning: negative --ell clamped to 0\n";
    requested.first = 0;
    requested.last = std::max(requested.last, 0);
  }
  GeneratorGraph graph = BuildGeneratorGraph(ideal);
  Json iterations = Json::array();
  std::ostringstream text;
  text << "ideal " << ideal.ToString() << "\n";
  text << "generator graph: " << graph.vertices.size() << " vertices, "
       << graph.edges.size() << " edges\n";
  for (auto [i, j] : graph.edges) {
    text << "  " << graph.vertices[i].ToString() << " -- "
         << graph.vertices[j].ToString() << "\n";
  }
  for (int ell = requested.first; ell <= requested.last; ++ell) {
    MonomialIdeal a = IteratedAdjacency(ideal, ell);
    iterations.push_back({{"ell", ell}, {"ideal", ToJson(a)["generators"]}});
    text << "A^" << ell << "(I) = " << a.ToString() << "\n";
  }
  if (c.json) {
    Json edges = Json::array();
    for (auto [i, j] : graph.edges) {
      edges.push_back({ToJson(graph.vertices[i]), ToJson(graph.vertices[j])});
    }
    out << Json{{"ideal", ToJson(ideal)},
                {"generator_graph_edges", edges},
                {"adjacency", iterations}}
               .dump(2)
        << "\n";
  } else {
    out << text.str();
  }
  return kExitOk;
}

void AttachOracle(VerificationReport& report) {
  if (!report.applicable || report.lex_failure) return;
  auto lq = std::get<LinearQuotientsOrder>(
      ComputeSets(report.ideal, OrderLex(report.ideal)));
  report.oracle_match =
      BettiTableFromOrder(lq) == BettiTableOracle(report.ideal);
}

int CmdVerify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (!c.corpus.empty()) {
    CorpusOptions options;
    try {
      options = CorpusOptionsForFamily(c.corpus, c.max_n);
    } catch (const std::invalid_argument& e) {
      throw CliError{kExitBadInput, e.what()};
    }
    Json reports = Json::array();
    std::ostringstream text;
    bool all_passed = true;
    int count = 0;
    for (const auto& entry : MatroidCorpus(options)) {
      VerificationReport report = VerifyTheorem(IdealFromMatroid(entry.matroid));
      if (c.oracle) {
        if (entry.matroid.ground().size() <= kOracleMaxVariables) {
          AttachOracle(report);
        } else {
          err << "warning: oracle skipped for " << entry.name << " (n > "
              << kOracleMaxVariables << ")\n";
        }
      }
      all_passed = all_passed && report.passed();
      ++count;
      Json j = ToJson(report);
      j["name"] = entry.name;
      j["family"] = entry.family;
      reports.push_back(std::move(j));
      text << "== " << entry.name << "\n" << RenderReport(report);
    }
    if (c.json) {
      out << Json{{"instances", reports}, {"passed", all_passed}}.dump(2)
          << "\n";
    } else {
      out << text.str() << "corpus: " << count << " instances, "
          << (all_passed ? "all passed" : "FAILURES") << "\n";
    }
    return all_passed ? kExitOk : kExitCheckFailed;
  }

  MonomialIdeal ideal = LoadIdeal(c);
  // Reject over-cap oracle runs before the (possibly long) verification, but
  // still report non-matroidal input as such.
  if (c.oracle && ideal.ground().size() > kOracleMaxVariables &&
      !ideal.is_zero() && ideal.is_equigenerated() &&
      std::holds_alternative<Matroid>(IsMatroidal(ideal))) {
    throw CliError{kExitOracleCap, "oracle limited to n <= " +
                                       std::to_string(kOracleMaxVariables)};
  }
  VerificationReport report = VerifyTheorem(ideal);
  if (!report.applicable) {
    if (c.json) {
      out << ToJson(report).dump(2) << "\n";
    } else {
      out << RenderReport(report);
    }
    throw CliError{kExitNotMatroidal,
                   "input is not matroidal: " +
                       (report.inapplicable ? report.inapplicable->Describe()
                                            : std::string("?"))};
  }
  if (c.oracle) AttachOracle(report);
  if (c.json) {
    out << ToJson(report).dump(2) << "\n";
  } else {
    out << RenderReport(report);
  }
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int CmdBetti(const RunConfig& c, std::ostream& out, std::ostream& err) {
  MonomialIdeal ideal = LoadIdeal(c);
  if (ideal.is_zero()) {
    throw CliError{kExitNoLinearQuotients, "input is the zero ideal"};
  }
  if (c.oracle && ideal.ground().size() > kOracleMaxVariables) {
    throw CliError{kExitOracleCap,
                   "oracle limited to n <= " +
                       std::to_string(kOracleMaxVariables) + ", got n=" +
                       std::to_string(ideal.ground().size())};
  }
  std::optional<LinearQuotientsOrder> lq;
  if (!c.order.empty()) {
    lq = RequireLinearQuotients(c, ideal);
  } else {
    auto lex = ComputeSets(ideal, OrderLex(ideal));
    if (auto* found = std::get_if<LinearQuotientsOrder>(&lex)) {
      lq = *found;
    } else if (ideal.size() <= 24) {
      lq = FindLinearQuotientsOrder(ideal);
    }
  }
  if (!lq && !c.oracle) {
    throw CliError{kExitNoLinearQuotients,
                   "no generator order with linear quotients found for " +
                       ideal.ToString()};
  }
  if (!lq) err << "warning: no linear-quotients order; oracle table only\n";

  std::optional<BettiTable> from_order, oracle;
  if (lq) from_order = BettiTableFromOrder(*lq);
  if (c.oracle) oracle = BettiTableOracle(ideal);
  std::vector<BettiDifference> diff;
  if (from_order && oracle) diff = Diff(*from_order, *oracle);

  if (c.json) {
    Json doc = {{"ideal", ToJson(ideal)}};
    if (from_order) doc["linear_quotients"] = ToJson(*from_order);
    if (oracle) doc["oracle"] = ToJson(*oracle);
    if (from_order && oracle) {
      Json d = Json::array();
      for (const auto& x : diff) {
        d.push_back({{"i", x.homological_degree},
                     {"a", ToJson(x.multidegree)},
                     {"linear_quotients", x.left},
                     {"oracle", x.right}});
      }
      doc["diff"] = d;
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "ideal " << ideal.ToString() << "\n";
    if (from_order) {
      out << "linear-quotients table\n" << RenderBettiTable(*from_order);
    }
    if (oracle) out << "oracle table\n" << RenderBettiTable(*oracle);
    if (from_order && oracle) {
      out << "diff" << (diff.empty() ? " (empty)" : "") << "\n";
      for (const auto& x : diff) {
        out << "  beta_{" << x.homological_degree << ", "
            << x.multidegree.ToString() << "}: " << x.left << " vs " << x.right
            << "\n";
      }
    }
  }
  return diff.empty() ? kExitOk : kExitCheckFailed;
}

int CmdGen(const RunConfig& c, std::ostream& out, std::ostream&) {
  Json doc = InputDocument(c);
  MonomialIdeal ideal = [&] {
    try {
      return IdealFromJson(doc);
    } catch (const std::invalid_argument& e) {
      throw CliError{kExitBadInput, e.what()};
    }
  }();
  Json result;
  if (c.emit == "ideal") {
    result = ToJson(ideal);
  } else if (c.emit == "matroid") {
    if (ideal.is_zero() || !ideal.is_equigenerated()) {
      throw CliError{kExitNotMatroidal, "generators of " + ideal.ToString() +
                                            " have unequal degrees"};
    }
    auto m = IsMatroidal(ideal);
    if (auto* e = std::get_if<MatroidError>(&m)) {
      throw CliError{kExitNotMatroidal, e->Describe()};
    }
    result = ToJson(std::get<Matroid>(m));
  } else {
    throw CliError{kExitBadInput, "--emit must be matroid or ideal"};
  }
  out << result.dump() << "\n";
  return kExitOk;
}

void AddInputOptions(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--ideal", c.ideal,
                  "ideal or matroid JSON document (file path or inline)");
  cmd->add_option("--uniform", c.uniform, "uniform matroid U_{r,n} as r,n");
  cmd->add_option("--graphic", c.graphic,
                  "graph JSON {\"vertices\":..,\"edges\":..}");
  cmd->add_option("--transversal", c.transversal,
                  "set system JSON {\"n\":..,\"sets\":..}");
  cmd->add_flag("--json", c.json, "emit JSON instead of tables");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  RunConfig c;
  CLI::App app{"Multigraded shifts of matroidal ideals"};
  app.require_subcommand(1);

  auto* shifts = app.add_subcommand("shifts", "shift ideals J_ell and Betti slices");
  AddInputOptions(shifts, c);
  shifts->add_option("--ell", c.ell, "homological degree a or range a..b");
  shifts->add_option("--order", c.order,
                     "generator order as a JSON list of index lists");

  auto* adjacency = app.add_subcommand("adjacency", "iterated adjacency ideals");
  AddInputOptions(adjacency, c);
  adjacency->add_option("--ell", c.ell, "number of iterations a or a..b");

  auto* verify = app.add_subcommand(
      "verify", "check that every J_ell is matroidal and iterated adjacency");
  AddInputOptions(verify, c);
  verify->add_flag("--oracle", c.oracle, "cross-check against homology");
  verify->add_option("--corpus", c.corpus, "uniform|graphic|transversal|all");
  verify->add_option("--max-n", c.max_n, "largest ground set in the corpus");

  auto* betti = app.add_subcommand("betti", "multigraded Betti table");
  AddInputOptions(betti, c);
  betti->add_flag("--oracle", c.oracle, "also compute the homology oracle");
  betti->add_option("--order", c.order,
                    "generator order as a JSON list of index lists");

  auto* gen = app.add_subcommand("gen", "emit a matroid or ideal document");
  AddInputOptions(gen, c);
  gen->add_option("--emit", c.emit, "matroid (default) or ideal");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (shifts->parsed()) return CmdShifts(c, out, err);
    if (adjacency->parsed()) return CmdAdjacency(c, out, err);
    if (verify->parsed()) return CmdVerify(c, out, err);
    if (betti->parsed()) return CmdBetti(c, out, err);
    if (gen->parsed()) return CmdGen(c, out, err);
  } catch (const CliError& e) {
    err << "error: " << e.message << "\n";
    return e.status;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace mshift
