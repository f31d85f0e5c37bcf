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

#ifndef SECLINT_CHECKERS_DIAGNOSTIC_H_
#define SECLINT_CHECKERS_DIAGNOSTIC_H_

#include <string>
#include <vector>

#include "seclint/checkers/guidelines.h"
#include "seclint/source_location.h"

namespace seclint {

struct Diagnostic {
  const Guideline* guideline = nullptr;
  SourceLocation loc;
  std::string message;
  // Secondary locations, e.g. the call whose errno result was overwritten.
  std::vector<SourceLocation> evidence;
  bool suppressed = false;
  std::string justification;  // from the deviation comment when suppressed
};

// Sort key: (file, line, column, guideline id).
bool DiagnosticLess(const Diagnostic& a, const Diagnostic& b);
bool DiagnosticSameSite(const Diagnostic& a, const Diagnostic& b);

// Sorts and drops exact duplicates (same guideline at the same location).
void SortAndUnique(std::vector<Diagnostic>& diags);

}  // namespace seclint

#endif  // SECLINT_CHECKERS_DIAGNOSTIC_H_
