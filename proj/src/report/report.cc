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

#include "seclint/report/report.h"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace seclint {

using Json = nlohmann::ordered_json;

const char* ExitStatusName(ExitStatus status) {
  switch (status) {
    case ExitStatus::kClean: return "Clean";
    case ExitStatus::kFindingsPresent: return "FindingsPresent";
    case ExitStatus::kUsageError: return "UsageError";
    case ExitStatus::kInputError: return "InputError";
  }
  return "?";
}

RunSummary Summarize(const std::vector<Diagnostic>& diags, size_t files_analyzed) {
  RunSummary s;
  s.files_analyzed = files_analyzed;
  s.diagnostics_total = diags.size();
  for (const Diagnostic& d : diags) {
    ++s.diagnostics_by_guideline[std::string(d.guideline->id)];
    if (d.suppressed) ++s.suppressed_count;
  }
  s.exit_status = s.diagnostics_total == s.suppressed_count ? ExitStatus::kClean
                                                            : ExitStatus::kFindingsPresent;
  return s;
}

std::string RenderText(const std::vector<Diagnostic>& diags) {
  std::ostringstream out;
  size_t suppressed = 0;
  for (const Diagnostic& d : diags) {
    if (d.suppressed) {
      out << "suppressed: ";
      ++suppressed;
    }
    out << d.loc.ToString() << ": [" << d.guideline->id << "] "
        << GuidelineCategoryName(d.guideline->category) << ": " << d.message << "\n";
  }
  out << diags.size() << (diags.size() == 1 ? " finding" : " findings");
  if (suppressed > 0) out << " (" << suppressed << " suppressed)";
  out << "\n";
  return out.str();
}

namespace {

Json Location(const SourceLocation& loc) {
  return Json{{"file", loc.file}, {"line", loc.line}, {"column", loc.column}};
}

SourceLocation ParseLocation(const Json& j) {
  return {j.at("file").get<std::string>(), j.at("line").get<int>(), j.at("column").get<int>()};
}

}  // namespace

std::string RenderJson(const std::vector<Diagnostic>& diags, const RunSummary& summary) {
  Json doc;
  doc["schema"] = 1;
  Json findings = Json::array();
  for (const Diagnostic& d : diags) {
    Json f;
    f["guideline"] = d.guideline->id;
    f["category"] = GuidelineCategoryName(d.guideline->category);
    f["file"] = d.loc.file;
    f["line"] = d.loc.line;
    f["column"] = d.loc.column;
    f["message"] = d.message;
    f["suppressed"] = d.suppressed;
    f["justification"] = d.justification;
    Json evidence = Json::array();
    for (const SourceLocation& e : d.evidence) evidence.push_back(Location(e));
    f["evidence"] = std::move(evidence);
    findings.push_back(std::move(f));
  }
  doc["findings"] = std::move(findings);
  Json s;
  s["files_analyzed"] = summary.files_analyzed;
  s["diagnostics_total"] = summary.diagnostics_total;
  Json by = Json::object();
  for (const auto& [id, n] : summary.diagnostics_by_guideline) by[id] = n;
  s["diagnostics_by_guideline"] = std::move(by);
  s["suppressed_count"] = summary.suppressed_count;
  s["exit_status"] = ExitStatusName(summary.exit_status);
  doc["summary"] = std::move(s);
  return doc.dump(2) + "\n";
}

ParsedReport ParseJsonReport(const std::string& text) {
  ParsedReport out;
  try {
    const Json doc = Json::parse(text);
    if (doc.at("schema").get<int>() != 1) throw std::runtime_error("unsupported schema version");
    for (const Json& f : doc.at("findings")) {
      Diagnostic d;
      d.guideline = FindGuideline(f.at("guideline").get<std::string>());
      if (!d.guideline) throw std::runtime_error("unknown guideline in report");
      d.loc = {f.at("file").get<std::string>(), f.at("line").get<int>(),
               f.at("column").get<int>()};
      d.message = f.at("message").get<std::string>();
      d.suppressed = f.at("suppressed").get<bool>();
      d.justification = f.at("justification").get<std::string>();
      for (const Json& e : f.at("evidence")) d.evidence.push_back(ParseLocation(e));
      out.findings.push_back(std::move(d));
    }
    const Json& s = doc.at("summary");
    out.summary.files_analyzed = s.at("files_analyzed").get<size_t>();
    out.summary.diagnostics_total = s.at("diagnostics_total").get<size_t>();
    for (const auto& [id, n] : s.at("diagnostics_by_guideline").items()) {
      out.summary.diagnostics_by_guideline[id] = n.get<size_t>();
    }
    out.summary.suppressed_count = s.at("suppressed_count").get<size_t>();
    const std::string status = s.at("exit_status").get<std::string>();
    bool known = false;
    for (ExitStatus e : {ExitStatus::kClean, ExitStatus::kFindingsPresent,
                         ExitStatus::kUsageError, ExitStatus::kInputError}) {
      if (status == ExitStatusName(e)) {
        out.summary.exit_status = e;
        known = true;
      }
    }
    if (!known) throw std::runtime_error("unknown exit_status '" + status + "'");
  } catch (const Json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
  return out;
}

bool SameDiagnostic(const Diagnostic& a, const Diagnostic& b) {
  return a.guideline == b.guideline && a.loc == b.loc && a.message == b.message &&
         a.evidence == b.evidence && a.suppressed == b.suppressed &&
         a.justification == b.justification;
}

std::string RenderCoverageJson(std::span<const coverage::CoverageMatrix> matrices,
                               const coverage::GapReport* gaps) {
  using namespace coverage;
  Json doc;
  doc["schema"] = 1;
  Json list = Json::array();
  for (const CoverageMatrix& m : matrices) {
    Json j;
    j["ruleset"] = RulesetSpelling(m.ruleset);
    j["profile"] = ProfileSpelling(m.profile);
    Json counts = Json::object();
    for (int k = 0; k < kCoverageKindCount; ++k) {
      counts[std::string(KindSpelling(static_cast<CoverageKind>(k)))] = m.counts[k];
    }
    j["counts"] = std::move(counts);
    j["total"] = m.total;
    list.push_back(std::move(j));
  }
  doc["matrices"] = std::move(list);
  if (gaps) {
    Json rows = Json::array();
    for (const GapRow& row : gaps->rows) {
      rows.push_back(Json{{"rule_id", row.rule->rule_id},
                          {"kind", KindSpelling(row.kind)},
                          {"guidelines", row.guidelines}});
    }
    doc["gaps"] = Json{{"action_items", gaps->action_items}, {"rows", std::move(rows)}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace seclint
