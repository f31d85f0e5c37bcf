// Copyright 2026 The seclint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <cctype>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "invariants.h"
#include "seclint/analyzer.h"
#include "seclint/checkers/checkers.h"
#include "seclint/checkers/guidelines.h"
#include "seclint/cli/cli.h"
#include "seclint/coverage/coverage.h"
#include "seclint/sema/library.h"
#include "test_util.h"

namespace seclint::testing {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
};

Outcome RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "seclint");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::Main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

// Criterion context: failures are appended as reasons.
struct Check {
  std::vector<std::string> problems;
  void Expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

// Label -> numbers on that row of a rendered table.
std::map<std::string, std::vector<int>> TableRows(const std::string& table) {
  std::map<std::string, std::vector<int>> rows;
  std::istringstream in(table);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string label;
    std::vector<int> numbers;
    std::string w;
    while (words >> w) {
      if (!w.empty() && std::isdigit(static_cast<unsigned char>(w[0])) &&
          w.find_first_not_of("0123456789") == std::string::npos) {
        numbers.push_back(std::stoi(w));
      } else if (numbers.empty()) {
        label += (label.empty() ? "" : " ") + w;
      }
    }
    if (!numbers.empty()) rows[label] = numbers;
  }
  return rows;
}

void ExpectColumns(Check& c, const std::string& table,
                   const std::vector<std::pair<std::string, std::vector<int>>>& expected) {
  const auto rows = TableRows(table);
  for (const auto& [label, values] : expected) {
    const auto it = rows.find(label);
    c.Expect(it != rows.end() && it->second == values, "row '" + label + "' mismatch");
  }
}

Check TableOne() {
  Check c;
  const Outcome o = RunCli({"coverage", "--ruleset", "ts17961"});
  c.Expect(o.code == 0, "exit code " + std::to_string(o.code));
  ExpectColumns(c, o.out,
                {{"Full, explicit", {22, 35}},
                 {"Full, implicit", {7, 3}},
                 {"Full, restrictive", {11, 8}},
                 {"Partial, broad", {2, 0}},
                 {"None", {4, 0}},
                 {"Total", {46, 46}}});
  return c;
}

Check TableTwo() {
  Check c;
  const Outcome a = RunCli({"coverage", "--ruleset", "certc2014"});
  const Outcome b = RunCli({"coverage", "--ruleset", "certc2016"});
  c.Expect(a.code == 0 && b.code == 0, "coverage command failed");
  ExpectColumns(c, a.out,
                {{"C11 specific", {13}},
                 {"Full, explicit", {41}},
                 {"Full, implicit", {17}},
                 {"Full, restrictive", {22}},
                 {"None", {5}},
                 {"Total", {98}}});
  ExpectColumns(c, b.out,
                {{"C11 specific", {14}},
                 {"Full, explicit", {42}},
                 {"Full, implicit", {17}},
                 {"Full, restrictive", {21}},
                 {"None", {5}},
                 {"Total", {99}}});
  std::set<std::string> old_ids;
  std::set<std::string> new_ids;
  for (const auto& r : coverage::Catalog(coverage::Ruleset::kCertC2014)) old_ids.insert(r.rule_id);
  for (const auto& r : coverage::Catalog(coverage::Ruleset::kCertC2016)) new_ids.insert(r.rule_id);
  int added = 0;
  int removed = 0;
  for (const auto& id : new_ids) added += old_ids.count(id) ? 0 : 1;
  for (const auto& id : old_ids) removed += new_ids.count(id) ? 0 : 1;
  c.Expect(added == 2 && removed == 1,
           "catalog delta +" + std::to_string(added) + "/-" + std::to_string(removed));
  return c;
}

Check RegistryAudit() {
  Check c;
  std::map<GuidelineCategory, int> categories;
  std::set<GuidelineFamily> families;
  int amendment = 0;
  int bans = 0;
  for (const Guideline& g : GuidelineRegistry()) {
    if (g.is_ban()) {
      ++bans;
      continue;
    }
    ++amendment;
    ++categories[g.category];
    families.insert(g.family);
  }
  c.Expect(amendment == 14, std::to_string(amendment) + " guidelines");
  c.Expect(categories[GuidelineCategory::kDirective] == 1 &&
               categories[GuidelineCategory::kMandatory] == 6 &&
               categories[GuidelineCategory::kRequired] == 7,
           "category split");
  c.Expect(families.size() == 8, std::to_string(families.size()) + " families");
  c.Expect(bans == 4, std::to_string(bans) + " bans");
  return c;
}

const std::map<std::string, GuidelineFamily>& FamilyDirs() {
  static const std::map<std::string, GuidelineFamily> dirs = {
      {"extdata", GuidelineFamily::kExternalData}, {"sizeof", GuidelineFamily::kSizeofArrayParam},
      {"ctype", GuidelineFamily::kCtype},          {"mem", GuidelineFamily::kMemCompare},
      {"env", GuidelineFamily::kEnvironment},      {"string", GuidelineFamily::kStringHandling},
      {"eof", GuidelineFamily::kEofHandling},      {"errno", GuidelineFamily::kErrno},
      {"bans", GuidelineFamily::kRestrictiveBan}};
  return dirs;
}

Check CorpusExactness() {
  Check c;
  const std::vector<std::string> files = CorpusFiles();
  c.Expect(files.size() >= 90, std::to_string(files.size()) + " corpus files");
  const Outcome o = RunCli({"corpus", SECLINT_CORPUS_DIR});
  c.Expect(o.code == 0, "corpus run failed");
  const std::string summary = std::to_string(files.size()) + "/" + std::to_string(files.size()) +
                              " PASS";
  c.Expect(o.out.find(summary) != std::string::npos, "summary line missing: " + summary);

  std::map<GuidelineFamily, int> violating;
  std::map<GuidelineFamily, int> clean;
  for (const std::string& path : files) {
    const auto notes = cli::ParseCorpusAnnotations(ReadFile(path));
    std::set<GuidelineFamily> hit;
    for (const auto& [id, line] : notes.expected) {
      if (const Guideline* g = FindGuideline(id)) hit.insert(g->family);
    }
    for (GuidelineFamily f : hit) ++violating[f];
    const std::string dir =
        fs::relative(path, SECLINT_CORPUS_DIR).begin()->string();
    const auto it = FamilyDirs().find(dir);
    if (it != FamilyDirs().end() && notes.expected.empty() && notes.expected_suppressed.empty() &&
        !notes.expect_error) {
      ++clean[it->second];
    }
  }
  for (const auto& [dir, family] : FamilyDirs()) {
    c.Expect(violating[family] >= 3, dir + ": " + std::to_string(violating[family]) + " violating");
    c.Expect(clean[family] >= 2, dir + ": " + std::to_string(clean[family]) + " clean");
  }
  return c;
}

Check OracleAgreement() {
  Check c;
  int compared = 0;
  for (const std::string& path : CorpusFiles()) {
    const std::string text = ReadFile(path);
    if (cli::ParseCorpusAnnotations(text).expect_error) continue;
    const OracleComparison r = CompareWithOracle(text, path, 6);
    compared += r.functions_compared;
    for (const std::string& m : r.mismatches) c.problems.push_back(m);
  }
  c.Expect(compared > 0, "no functions compared");
  return c;
}

Check Determinism() {
  Check c;
  for (const char* format : {"text", "json"}) {
    const Outcome one = RunCli({"check", "--format", format, "--jobs", "1", SECLINT_CORPUS_DIR});
    const Outcome eight = RunCli({"check", "--format", format, "--jobs", "8", SECLINT_CORPUS_DIR});
    c.Expect(one.out == eight.out && one.code == eight.code,
             std::string(format) + ": jobs 1 and 8 differ");
    for (int i = 0; i < 3; ++i) {
      const Outcome again =
          RunCli({"check", "--format", format, "--jobs", "8", SECLINT_CORPUS_DIR});
      c.Expect(again.out == one.out && again.code == one.code,
               std::string(format) + ": repeat run " + std::to_string(i + 1) + " differs");
    }
  }
  return c;
}

Check ProfileSemantics() {
  Check c;
  const std::map<std::string, std::string> bans = {
      {"malloc", "BAN.21_3"}, {"signal", "BAN.21_5"}, {"printf", "BAN.21_6"},
      {"getenv", "BAN.21_8"}};
  std::map<std::string, int> seen;
  AnalysisOptions restrictive;
  restrictive.profile = Profile::kRestrictive;
  for (const std::string& path : CorpusFiles()) {
    const std::string text = ReadFile(path);
    if (cli::ParseCorpusAnnotations(text).expect_error) continue;
    const FileAnalysis security = AnalyzeSource(text, path, {});
    for (const Diagnostic& d : security.diagnostics) {
      c.Expect(!d.guideline->is_ban(), path + ": ban under security profile");
    }
    const FileAnalysis banned = AnalyzeSource(text, path, restrictive);
    std::multiset<std::pair<std::string, int>> emitted;
    for (const Diagnostic& d : banned.diagnostics) {
      if (!d.suppressed) emitted.emplace(std::string(d.guideline->id), d.loc.line);
    }
    const auto r = ResolveSource(text, path);
    Walk(r->tu, [&](const AstNode& n) {
      if (n.kind != NodeKind::kCall || !n.library) return;
      const auto it = bans.find(std::string(n.library->name));
      if (it == bans.end()) return;
      ++seen[it->first];
      const auto key = std::make_pair(it->second, n.loc.line);
      const auto e = emitted.find(key);
      c.Expect(e != emitted.end(), path + ":" + std::to_string(n.loc.line) + ": no " + it->second);
      if (e != emitted.end()) emitted.erase(e);
    });
  }
  for (const auto& [name, id] : bans) {
    c.Expect(seen[name] > 0, "corpus never calls " + name);
  }
  return c;
}

Check FixpointIdempotence() {
  Check c;
  int functions = 0;
  for (const std::string& path : CorpusFiles()) {
    const std::string text = ReadFile(path);
    if (cli::ParseCorpusAnnotations(text).expect_error) continue;
    const auto r = ResolveSource(text, path);
    const TransferFunction transfer(r->res.symbols);
    for (const auto& top : r->tu.top_level) {
      if (top->kind != NodeKind::kFunctionDef) continue;
      ++functions;
      const FunctionFlow fn = AnalyzeFunctionFlow(*top, transfer);
      for (const std::string& v : FixpointViolations(fn.cfg, fn.flow, transfer)) {
        c.problems.push_back(path + ": " + top->text + ": " + v);
      }
    }
  }
  c.Expect(functions > 0, "no functions");
  return c;
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;  // 0: no time limit
  std::function<Check()> run;
};

int Main() {
  const std::vector<Criterion> criteria = {
      {1, "TS 17961 coverage table", 1.0, TableOne},
      {2, "CERT C coverage tables and catalog delta", 1.0, TableTwo},
      {3, "guideline registry audit", 0, RegistryAudit},
      {4, "corpus exactness", 10.0, CorpusExactness},
      {5, "dataflow oracle agreement", 5.0, OracleAgreement},
      {6, "determinism across job counts and runs", 0, Determinism},
      {7, "profile semantics", 0, ProfileSemantics},
      {8, "fixpoint idempotence", 0, FixpointIdempotence},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_seconds > 0 && seconds >= cr.budget_seconds) {
      c.problems.push_back("took " + std::to_string(seconds) + " s");
    }
    const bool ok = c.problems.empty();
    if (!ok) ++failed;
    std::ostringstream ms;
    ms.precision(3);
    ms << std::fixed << seconds;
    std::cout << (ok ? "PASS" : "FAIL") << " " << cr.number << " " << cr.name << " (" << ms.str()
              << " s)\n";
    for (size_t i = 0; i < c.problems.size() && i < 20; ++i) {
      std::cout << "  " << c.problems[i] << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace seclint::testing

int main() { return seclint::testing::Main(); }
