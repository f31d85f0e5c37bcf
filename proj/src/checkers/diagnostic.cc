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

#include "seclint/checkers/diagnostic.h"

#include <algorithm>
#include <tuple>

namespace seclint {

bool DiagnosticLess(const Diagnostic& a, const Diagnostic& b) {
  return std::tie(a.loc.file, a.loc.line, a.loc.column, a.guideline->id, a.message) <
         std::tie(b.loc.file, b.loc.line, b.loc.column, b.guideline->id, b.message);
}

bool DiagnosticSameSite(const Diagnostic& a, const Diagnostic& b) {
  return a.loc == b.loc && a.guideline == b.guideline;
}

void SortAndUnique(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(), DiagnosticLess);
  diags.erase(std::unique(diags.begin(), diags.end(), DiagnosticSameSite), diags.end());
}

}  // namespace seclint
