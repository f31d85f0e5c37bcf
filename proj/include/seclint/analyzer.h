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

#ifndef SECLINT_ANALYZER_H_
#define SECLINT_ANALYZER_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "seclint/checkers/checkers.h"
#include "seclint/checkers/diagnostic.h"
#include "seclint/frontend/errors.h"
#include "seclint/sema/resolver.h"

namespace seclint {

struct AnalysisOptions {
  Profile profile = Profile::kSecurity;
  // When non-empty, only these guideline ids are reported.
  std::set<std::string, std::less<>> enabled;
  // Guideline ids switched off regardless of profile.
  std::set<std::string, std::less<>> disabled;
};

struct FileAnalysis {
  std::string path;
  std::vector<Diagnostic> diagnostics;  // sorted
  std::vector<SemaNote> notes;
  // Set when the file could not be analyzed (read, lex, parse or
  // unsupported-directive error); diagnostics are then empty.
  std::optional<std::string> error;
};

// Runs frontend, sema and the enabled checkers over one source text.
FileAnalysis AnalyzeSource(std::string_view text, const std::string& path,
                           const AnalysisOptions& options);

// Reads `path` and analyzes it.
FileAnalysis AnalyzeFile(const std::string& path, const AnalysisOptions& options);

}  // namespace seclint

#endif  // SECLINT_ANALYZER_H_
