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

#ifndef SECLINT_COVERAGE_COVERAGE_H_
#define SECLINT_COVERAGE_COVERAGE_H_

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seclint::coverage {

enum class CoverageKind { kExplicit, kImplicit, kRestrictive, kBroad, kNone, kC11Specific };
inline constexpr int kCoverageKindCount = 6;

enum class Ruleset { kTS17961, kCertC2014, kCertC2016 };

// MC3 is the core guideline set; MC3 + MC3A1 adds Amendment 1.
enum class Profile { kMC3, kMC3Amd1 };

// File spellings: explicit, implicit, ... / ts17961, ... / mc3, mc3a1.
std::string_view KindSpelling(CoverageKind kind);
std::string_view RulesetSpelling(Ruleset ruleset);
std::string_view ProfileSpelling(Profile profile);
std::optional<CoverageKind> ParseKind(std::string_view s);
std::optional<Ruleset> ParseRuleset(std::string_view s);
std::optional<Profile> ParseProfile(std::string_view s);

// Row labels as in the published tables ("Full, explicit", ...).
std::string_view KindLabel(CoverageKind kind);
std::string_view RulesetLabel(Ruleset ruleset);
std::string_view ProfileLabel(Profile profile);

bool IsCertRuleset(Ruleset ruleset);

// Profiles for which every rule of `ruleset` must be mapped.
std::vector<Profile> ApplicableProfiles(Ruleset ruleset);

struct ExternalRule {
  Ruleset ruleset;
  std::string rule_id;
  std::string title;
};

// The compiled-in rule catalog, ordered by rule_id.
std::span<const ExternalRule> Catalog(Ruleset ruleset);
const ExternalRule* FindRule(Ruleset ruleset, std::string_view rule_id);

// Guideline ids a mapping may cite: the analyzer's registry plus the
// MISRA C:2012 directive and rule numbering including Amendment 1.
bool IsKnownGuideline(std::string_view id);
// True for ids introduced by Amendment 1 (and for the analyzer's SEC.*
// guidelines, which implement it).
bool IsAmendmentGuideline(std::string_view id);

struct MappingEntry {
  Ruleset ruleset;
  std::string rule_id;
  Profile profile;
  CoverageKind kind;
  std::vector<std::string> guidelines;
  int line = 0;
};

class CoverageError : public std::runtime_error {
 public:
  enum class Kind { kMalformedMapping, kDanglingReference, kDuplicateEntry, kIncompleteMapping };

  CoverageError(Kind kind, int line, const std::string& message,
                std::vector<std::string> rule_ids = {});

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  // Unmapped rule ids for kIncompleteMapping.
  const std::vector<std::string>& rule_ids() const { return rule_ids_; }

  static const char* KindName(Kind kind);

 private:
  Kind kind_;
  int line_;
  std::vector<std::string> rule_ids_;
};

// Parses and validates mapping data. Throws CoverageError.
std::vector<MappingEntry> LoadMappings(std::string_view data);
std::vector<MappingEntry> LoadMappingFile(const std::string& path);

struct CoverageMatrix {
  Ruleset ruleset;
  Profile profile;
  std::array<int, kCoverageKindCount> counts{};
  int total = 0;

  int count(CoverageKind kind) const { return counts[static_cast<size_t>(kind)]; }
};

// Throws CoverageError(kIncompleteMapping) naming unmapped rules.
CoverageMatrix Aggregate(const std::vector<MappingEntry>& entries, Ruleset ruleset,
                         Profile profile);

struct GapRow {
  const ExternalRule* rule;
  CoverageKind kind;
  std::vector<std::string> guidelines;
};

struct GapReport {
  // Broad and None rows first (the action items), then the rest; each part
  // ordered by rule_id.
  std::vector<GapRow> rows;
  size_t action_items = 0;
};

GapReport BuildGapReport(const std::vector<MappingEntry>& entries, Ruleset ruleset,
                         Profile profile);

// Plain-text table: one column per matrix, rows in published order.
std::string RenderMatrixTable(std::span<const CoverageMatrix> columns);
std::string RenderGapReport(const GapReport& report);

}  // namespace seclint::coverage

#endif  // SECLINT_COVERAGE_COVERAGE_H_
