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

#ifndef SECLINT_REPORT_REPORT_H_
#define SECLINT_REPORT_REPORT_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "seclint/checkers/diagnostic.h"
#include "seclint/coverage/coverage.h"

namespace seclint {

enum class ExitStatus { kClean = 0, kFindingsPresent = 1, kUsageError = 2, kInputError = 3 };

const char* ExitStatusName(ExitStatus status);

struct RunSummary {
  size_t files_analyzed = 0;
  size_t diagnostics_total = 0;
  std::map<std::string, size_t> diagnostics_by_guideline;
  size_t suppressed_count = 0;
  ExitStatus exit_status = ExitStatus::kClean;

  bool operator==(const RunSummary&) const = default;
};

// Counts only; exit_status is Clean iff every diagnostic is suppressed.
RunSummary Summarize(const std::vector<Diagnostic>& diags, size_t files_analyzed);

// One line per diagnostic followed by the summary line "N findings".
std::string RenderText(const std::vector<Diagnostic>& diags);

// Versioned JSON document; key order is fixed (see docs/json-schema.md).
std::string RenderJson(const std::vector<Diagnostic>& diags, const RunSummary& summary);

struct ParsedReport {
  std::vector<Diagnostic> findings;
  RunSummary summary;
};

// Inverse of RenderJson. Throws std::runtime_error on malformed input.
ParsedReport ParseJsonReport(const std::string& text);

bool SameDiagnostic(const Diagnostic& a, const Diagnostic& b);

std::string RenderCoverageJson(std::span<const coverage::CoverageMatrix> matrices,
                               const coverage::GapReport* gaps);

}  // namespace seclint

#endif  // SECLINT_REPORT_REPORT_H_
