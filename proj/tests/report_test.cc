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

#include <gtest/gtest.h>

#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "seclint/analyzer.h"
#include "seclint/checkers/guidelines.h"
#include "seclint/report/report.h"

namespace seclint {
namespace {

Diagnostic Make(std::string_view id, int line, int column, bool suppressed = false) {
  Diagnostic d;
  d.guideline = FindGuideline(id);
  d.loc = SourceLocation{"src/a.c", line, column};
  d.message = "message for " + std::string(id);
  d.suppressed = suppressed;
  if (suppressed) d.justification = "reviewed";
  return d;
}

TEST(RenderTextTest, EmptyRun) { EXPECT_EQ(RenderText({}), "0 findings\n"); }

TEST(RenderTextTest, OneFindingMatchesGrammar) {
  const std::string text = RenderText({Make("SEC.string.1", 3, 5)});
  std::istringstream lines(text);
  std::string first;
  std::string last;
  std::getline(lines, first);
  std::getline(lines, last);
  const std::regex grammar(R"(^([^:]+):(\d+):(\d+): \[([A-Za-z0-9._]+)\] (\w+): (.+)$)");
  std::smatch m;
  ASSERT_TRUE(std::regex_match(first, m, grammar)) << first;
  EXPECT_EQ(m[1], "src/a.c");
  EXPECT_EQ(m[2], "3");
  EXPECT_EQ(m[3], "5");
  EXPECT_EQ(m[4], "SEC.string.1");
  EXPECT_EQ(m[5], "mandatory");
  EXPECT_EQ(last, "1 finding");
}

TEST(RenderTextTest, SuppressedPrefixAndCount) {
  const std::string text = RenderText({Make("SEC.mem.2", 1, 1), Make("SEC.mem.3", 2, 1, true)});
  EXPECT_NE(text.find("\nsuppressed: src/a.c:2:1: [SEC.mem.3] required: "), std::string::npos)
      << text;
  EXPECT_NE(text.find("2 findings (1 suppressed)\n"), std::string::npos) << text;
}

TEST(RenderTextTest, Deterministic) {
  const std::vector<Diagnostic> diags = {Make("SEC.errno.1", 4, 2), Make("SEC.errno.2", 9, 2)};
  EXPECT_EQ(RenderText(diags), RenderText(diags));
}

TEST(SummaryTest, Counts) {
  const RunSummary s = Summarize(
      {Make("SEC.errno.1", 4, 2), Make("SEC.errno.1", 5, 2), Make("SEC.errno.2", 9, 2, true)}, 2);
  EXPECT_EQ(s.files_analyzed, 2u);
  EXPECT_EQ(s.diagnostics_total, 3u);
  EXPECT_EQ(s.suppressed_count, 1u);
  EXPECT_EQ(s.diagnostics_by_guideline.at("SEC.errno.1"), 2u);
  EXPECT_EQ(s.exit_status, ExitStatus::kFindingsPresent);
}

TEST(RenderJsonTest, EmptyRun) {
  const auto doc = nlohmann::json::parse(RenderJson({}, Summarize({}, 0)));
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_TRUE(doc["findings"].empty());
  EXPECT_EQ(doc["summary"]["diagnostics_total"], 0);
  EXPECT_EQ(doc["summary"]["suppressed_count"], 0);
  EXPECT_EQ(doc["summary"]["exit_status"], "Clean");
}

TEST(RenderJsonTest, OneSuppressedFindingIsClean) {
  const std::vector<Diagnostic> diags = {Make("SEC.env.1", 7, 3, true)};
  const auto doc = nlohmann::json::parse(RenderJson(diags, Summarize(diags, 1)));
  EXPECT_EQ(doc["findings"].size(), 1u);
  EXPECT_EQ(doc["findings"][0]["suppressed"], true);
  EXPECT_EQ(doc["summary"]["suppressed_count"], 1);
  EXPECT_EQ(doc["summary"]["exit_status"], "Clean");
}

TEST(RenderJsonTest, KeyOrderIsFixed) {
  const std::string json = RenderJson({Make("SEC.ctype.1", 1, 1)}, Summarize({}, 1));
  const std::vector<std::string> keys = {"\"schema\"",   "\"findings\"", "\"guideline\"",
                                         "\"category\"", "\"file\"",     "\"line\"",
                                         "\"column\"",   "\"message\"",  "\"suppressed\"",
                                         "\"evidence\"", "\"summary\""};
  size_t pos = 0;
  for (const std::string& k : keys) {
    const size_t next = json.find(k, pos);
    ASSERT_NE(next, std::string::npos) << k;
    pos = next;
  }
}

TEST(RenderJsonTest, RoundTrip) {
  const FileAnalysis a = AnalyzeSource(
      "#include <stdlib.h>\nvoid use(char c);\nvoid f(void) {\n"
      "  char *p = getenv(\"A\");\n  char *q = getenv(\"B\");\n"
      "  /* seclint-deviation: SEC.env.2 copied before reuse */\n  use(p[0]);\n  q[0] = 0;\n}\n",
      "x.c", {});
  ASSERT_EQ(a.diagnostics.size(), 2u);
  const RunSummary summary = Summarize(a.diagnostics, 1);
  const std::string json = RenderJson(a.diagnostics, summary);
  const ParsedReport back = ParseJsonReport(json);
  ASSERT_EQ(back.findings.size(), a.diagnostics.size());
  for (size_t i = 0; i < back.findings.size(); ++i) {
    EXPECT_TRUE(SameDiagnostic(back.findings[i], a.diagnostics[i])) << i;
  }
  EXPECT_EQ(back.summary, summary);
  EXPECT_EQ(RenderJson(back.findings, back.summary), json);
}

}  // namespace
}  // namespace seclint
