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

#include "seclint/coverage/coverage.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "seclint/checkers/guidelines.h"

namespace seclint::coverage {

namespace {

struct Spelling {
  CoverageKind kind;
  std::string_view spelling;
  std::string_view label;
};

constexpr Spelling kKinds[] = {
    {CoverageKind::kExplicit, "explicit", "Full, explicit"},
    {CoverageKind::kImplicit, "implicit", "Full, implicit"},
    {CoverageKind::kRestrictive, "restrictive", "Full, restrictive"},
    {CoverageKind::kBroad, "broad", "Partial, broad"},
    {CoverageKind::kNone, "none", "None"},
    {CoverageKind::kC11Specific, "c11", "C11 specific"},
};

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    out.push_back(Trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<ExternalRule> MakeCatalog(Ruleset ruleset) {
  std::vector<ExternalRule> rules;
  auto add = [&](const std::string& id) {
    rules.push_back({ruleset, id, "fixture rule " + id});
  };
  auto cert_id = [](int n) {
    std::string digits = std::to_string(n);
    return "CERT." + std::string(3 - digits.size(), '0') + digits;
  };
  switch (ruleset) {
    case Ruleset::kTS17961:
      for (int i = 1; i <= 46; ++i) add((i < 10 ? "TS.0" : "TS.") + std::to_string(i));
      break;
    case Ruleset::kCertC2014:
      for (int i = 1; i <= 98; ++i) add(cert_id(i));
      break;
    case Ruleset::kCertC2016:
      // One rule withdrawn, two added.
      for (int i = 1; i <= 100; ++i) {
        if (i != 50) add(cert_id(i));
      }
      break;
  }
  return rules;
}

// MISRA C:2012 numbering. Amendment 1 adds D4.14, R12.5, R21.13-R21.20 and
// R22.7-R22.10.
std::set<std::string, std::less<>> MakeMisraIds(bool amendment_only) {
  static constexpr int kRulesPerChapter[] = {3, 7, 2, 2, 9, 2, 4, 14, 5, 8, 9,
                                             4, 6, 4, 7, 7, 8, 8, 2, 14, 12, 6};
  std::set<std::string, std::less<>> ids;
  auto add = [&](const std::string& id, bool amendment) {
    if (amendment || !amendment_only) ids.insert(id);
  };
  add("D1.1", false);
  add("D2.1", false);
  add("D3.1", false);
  for (int i = 1; i <= 14; ++i) add("D4." + std::to_string(i), i == 14);
  for (int ch = 1; ch <= 22; ++ch) {
    const int core = kRulesPerChapter[ch - 1];
    const int last = ch == 12 ? 5 : ch == 21 ? 20 : ch == 22 ? 10 : core;
    for (int r = 1; r <= last; ++r) {
      add("R" + std::to_string(ch) + "." + std::to_string(r), r > core);
    }
  }
  return ids;
}

CoverageError Malformed(int line, const std::string& reason) {
  return CoverageError(CoverageError::Kind::kMalformedMapping, line, reason);
}

}  // namespace

std::string_view KindSpelling(CoverageKind kind) {
  return kKinds[static_cast<size_t>(kind)].spelling;
}

std::string_view KindLabel(CoverageKind kind) { return kKinds[static_cast<size_t>(kind)].label; }

std::optional<CoverageKind> ParseKind(std::string_view s) {
  for (const Spelling& k : kKinds) {
    if (k.spelling == s) return k.kind;
  }
  return std::nullopt;
}

std::string_view RulesetSpelling(Ruleset ruleset) {
  switch (ruleset) {
    case Ruleset::kTS17961: return "ts17961";
    case Ruleset::kCertC2014: return "certc2014";
    case Ruleset::kCertC2016: return "certc2016";
  }
  return "?";
}

std::string_view RulesetLabel(Ruleset ruleset) {
  switch (ruleset) {
    case Ruleset::kTS17961: return "TS 17961";
    case Ruleset::kCertC2014: return "CERT C:2014";
    case Ruleset::kCertC2016: return "CERT C:2016";
  }
  return "?";
}

std::optional<Ruleset> ParseRuleset(std::string_view s) {
  for (Ruleset r : {Ruleset::kTS17961, Ruleset::kCertC2014, Ruleset::kCertC2016}) {
    if (RulesetSpelling(r) == s) return r;
  }
  return std::nullopt;
}

std::string_view ProfileSpelling(Profile profile) {
  return profile == Profile::kMC3 ? "mc3" : "mc3a1";
}

std::string_view ProfileLabel(Profile profile) {
  return profile == Profile::kMC3 ? "MC3" : "MC3 + MC3A1";
}

std::optional<Profile> ParseProfile(std::string_view s) {
  if (s == "mc3") return Profile::kMC3;
  if (s == "mc3a1") return Profile::kMC3Amd1;
  return std::nullopt;
}

bool IsCertRuleset(Ruleset ruleset) { return ruleset != Ruleset::kTS17961; }

std::vector<Profile> ApplicableProfiles(Ruleset ruleset) {
  if (IsCertRuleset(ruleset)) return {Profile::kMC3Amd1};
  return {Profile::kMC3, Profile::kMC3Amd1};
}

std::span<const ExternalRule> Catalog(Ruleset ruleset) {
  static const std::vector<ExternalRule> kCatalogs[] = {
      MakeCatalog(Ruleset::kTS17961),
      MakeCatalog(Ruleset::kCertC2014),
      MakeCatalog(Ruleset::kCertC2016),
  };
  return kCatalogs[static_cast<size_t>(ruleset)];
}

const ExternalRule* FindRule(Ruleset ruleset, std::string_view rule_id) {
  const auto rules = Catalog(ruleset);
  const auto it = std::lower_bound(
      rules.begin(), rules.end(), rule_id,
      [](const ExternalRule& r, std::string_view id) { return r.rule_id < id; });
  return it != rules.end() && it->rule_id == rule_id ? &*it : nullptr;
}

bool IsKnownGuideline(std::string_view id) {
  static const auto kMisra = MakeMisraIds(false);
  return kMisra.count(id) > 0 || FindGuideline(id) != nullptr;
}

bool IsAmendmentGuideline(std::string_view id) {
  static const auto kAmendment = MakeMisraIds(true);
  if (kAmendment.count(id)) return true;
  const Guideline* g = FindGuideline(id);
  return g && !g->is_ban();
}

CoverageError::CoverageError(Kind kind, int line, const std::string& message,
                             std::vector<std::string> rule_ids)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                         KindName(kind) + ": " + message),
      kind_(kind),
      line_(line),
      rule_ids_(std::move(rule_ids)) {}

const char* CoverageError::KindName(Kind kind) {
  switch (kind) {
    case Kind::kMalformedMapping: return "malformed mapping";
    case Kind::kDanglingReference: return "dangling reference";
    case Kind::kDuplicateEntry: return "duplicate entry";
    case Kind::kIncompleteMapping: return "incomplete mapping";
  }
  return "error";
}

std::vector<MappingEntry> LoadMappings(std::string_view data) {
  std::vector<MappingEntry> entries;
  std::set<std::tuple<Ruleset, std::string, Profile>> seen;
  int line_no = 0;
  size_t start = 0;
  while (start < data.size()) {
    size_t end = data.find('\n', start);
    if (end == std::string_view::npos) end = data.size();
    const std::string_view line = Trim(data.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto fields = Split(line, '|');
    if (fields.size() != 5) {
      throw Malformed(line_no, "expected 5 '|'-separated fields, found " +
                                   std::to_string(fields.size()));
    }
    MappingEntry e;
    e.line = line_no;
    const auto ruleset = ParseRuleset(fields[0]);
    if (!ruleset) throw Malformed(line_no, "unknown ruleset '" + std::string(fields[0]) + "'");
    const auto profile = ParseProfile(fields[2]);
    if (!profile) throw Malformed(line_no, "unknown profile '" + std::string(fields[2]) + "'");
    const auto kind = ParseKind(fields[3]);
    if (!kind) throw Malformed(line_no, "unknown coverage kind '" + std::string(fields[3]) + "'");
    e.ruleset = *ruleset;
    e.rule_id = std::string(fields[1]);
    e.profile = *profile;
    e.kind = *kind;

    const auto profiles = ApplicableProfiles(e.ruleset);
    if (std::find(profiles.begin(), profiles.end(), e.profile) == profiles.end()) {
      throw Malformed(line_no, "profile " + std::string(fields[2]) + " does not apply to " +
                                   std::string(fields[0]));
    }
    if (e.kind == CoverageKind::kC11Specific && !IsCertRuleset(e.ruleset)) {
      throw Malformed(line_no, "kind c11 is only valid for CERT C rulesets");
    }
    if (fields[4] != "-") {
      for (std::string_view id : Split(fields[4], ',')) {
        if (id.empty()) throw Malformed(line_no, "empty guideline id");
        e.guidelines.emplace_back(id);
      }
    }
    if (e.kind == CoverageKind::kNone && !e.guidelines.empty()) {
      throw Malformed(line_no, "kind none must not list covering guidelines");
    }
    const bool needs_guidelines = e.kind == CoverageKind::kExplicit ||
                                  e.kind == CoverageKind::kImplicit ||
                                  e.kind == CoverageKind::kRestrictive;
    if (needs_guidelines && e.guidelines.empty()) {
      throw Malformed(line_no, "kind " + std::string(fields[3]) +
                                   " requires at least one covering guideline");
    }
    if (!FindRule(e.ruleset, e.rule_id)) {
      throw CoverageError(CoverageError::Kind::kDanglingReference, line_no,
                          "unknown rule '" + e.rule_id + "' in " + std::string(fields[0]));
    }
    for (const std::string& id : e.guidelines) {
      if (!IsKnownGuideline(id)) {
        throw CoverageError(CoverageError::Kind::kDanglingReference, line_no,
                            "unknown guideline '" + id + "'");
      }
      if (e.profile == Profile::kMC3 && IsAmendmentGuideline(id)) {
        throw Malformed(line_no, "guideline " + id + " is not part of profile mc3");
      }
    }
    if (!seen.emplace(e.ruleset, e.rule_id, e.profile).second) {
      throw CoverageError(CoverageError::Kind::kDuplicateEntry, line_no,
                          "second entry for (" + e.rule_id + ", " + std::string(fields[2]) + ")");
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<MappingEntry> LoadMappingFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CoverageError(CoverageError::Kind::kMalformedMapping, 0,
                        path + ": cannot read mapping file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return LoadMappings(buffer.str());
}

namespace {

// Entries for (ruleset, profile) keyed by rule id; throws when incomplete.
std::map<std::string, const MappingEntry*> Select(const std::vector<MappingEntry>& entries,
                                                  Ruleset ruleset, Profile profile) {
  std::map<std::string, const MappingEntry*> by_rule;
  for (const MappingEntry& e : entries) {
    if (e.ruleset == ruleset && e.profile == profile) by_rule[e.rule_id] = &e;
  }
  std::vector<std::string> missing;
  for (const ExternalRule& r : Catalog(ruleset)) {
    if (!by_rule.count(r.rule_id)) missing.push_back(r.rule_id);
  }
  if (!missing.empty()) {
    std::string list;
    for (const std::string& id : missing) list += (list.empty() ? "" : ", ") + id;
    throw CoverageError(CoverageError::Kind::kIncompleteMapping, 0,
                        std::to_string(missing.size()) + " unmapped rules in " +
                            std::string(RulesetSpelling(ruleset)) + "/" +
                            std::string(ProfileSpelling(profile)) + ": " + list,
                        std::move(missing));
  }
  return by_rule;
}

}  // namespace

CoverageMatrix Aggregate(const std::vector<MappingEntry>& entries, Ruleset ruleset,
                         Profile profile) {
  CoverageMatrix m{ruleset, profile, {}, 0};
  for (const auto& [id, entry] : Select(entries, ruleset, profile)) {
    ++m.counts[static_cast<size_t>(entry->kind)];
    ++m.total;
  }
  return m;
}

GapReport BuildGapReport(const std::vector<MappingEntry>& entries, Ruleset ruleset,
                         Profile profile) {
  const auto by_rule = Select(entries, ruleset, profile);
  GapReport report;
  std::vector<GapRow> rest;
  for (const ExternalRule& r : Catalog(ruleset)) {
    const MappingEntry& e = *by_rule.at(r.rule_id);
    GapRow row{&r, e.kind, e.guidelines};
    if (e.kind == CoverageKind::kBroad || e.kind == CoverageKind::kNone) {
      report.rows.push_back(std::move(row));
    } else {
      rest.push_back(std::move(row));
    }
  }
  report.action_items = report.rows.size();
  for (GapRow& row : rest) report.rows.push_back(std::move(row));
  return report;
}

std::string RenderMatrixTable(std::span<const CoverageMatrix> columns) {
  if (columns.empty()) return "";
  bool any_cert = false;
  bool any_ts = false;
  for (const CoverageMatrix& m : columns) (IsCertRuleset(m.ruleset) ? any_cert : any_ts) = true;

  std::vector<CoverageKind> rows;
  if (any_cert) rows.push_back(CoverageKind::kC11Specific);
  rows.insert(rows.end(),
              {CoverageKind::kExplicit, CoverageKind::kImplicit, CoverageKind::kRestrictive});
  if (any_ts) rows.push_back(CoverageKind::kBroad);
  rows.push_back(CoverageKind::kNone);

  std::vector<std::string> headers;
  for (const CoverageMatrix& m : columns) {
    headers.emplace_back(IsCertRuleset(m.ruleset) ? RulesetLabel(m.ruleset)
                                                  : ProfileLabel(m.profile));
  }
  size_t label_width = std::string_view("Coverage kind").size();
  for (CoverageKind k : rows) label_width = std::max(label_width, KindLabel(k).size());

  std::ostringstream out;
  if (any_ts && !any_cert) {
    out << "MISRA C:2012 coverage of TS 17961\n";
  } else if (any_cert && !any_ts) {
    out << "MC3 + MC3A1 coverage of CERT C\n";
  }
  auto pad_left = [](const std::string& s, size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };
  auto pad_right = [](std::string_view s, size_t w) {
    return std::string(s) + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  std::string header = pad_right("Coverage kind", label_width);
  for (const std::string& h : headers) header += "  " + pad_left(h, std::max<size_t>(h.size(), 5));
  const std::string rule(header.size(), '-');
  out << header << "\n" << rule << "\n";
  auto emit = [&](std::string_view label, auto value_of) {
    out << pad_right(label, label_width);
    for (size_t c = 0; c < columns.size(); ++c) {
      out << "  " << pad_left(std::to_string(value_of(columns[c])),
                              std::max<size_t>(headers[c].size(), 5));
    }
    out << "\n";
  };
  for (CoverageKind k : rows) {
    emit(KindLabel(k), [k](const CoverageMatrix& m) { return m.count(k); });
  }
  out << rule << "\n";
  emit("Total", [](const CoverageMatrix& m) { return m.total; });
  return out.str();
}

std::string RenderGapReport(const GapReport& report) {
  std::ostringstream out;
  out << "Action items (" << report.action_items << "):\n";
  for (size_t i = 0; i < report.rows.size(); ++i) {
    if (i == report.action_items) out << "Covered (" << report.rows.size() - i << "):\n";
    const GapRow& row = report.rows[i];
    out << "  " << row.rule->rule_id << "  " << KindSpelling(row.kind);
    if (!row.guidelines.empty()) {
      out << "  ";
      for (size_t g = 0; g < row.guidelines.size(); ++g) {
        out << (g ? "," : "") << row.guidelines[g];
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace seclint::coverage
