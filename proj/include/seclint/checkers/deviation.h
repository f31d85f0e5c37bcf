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

#ifndef SECLINT_CHECKERS_DEVIATION_H_
#define SECLINT_CHECKERS_DEVIATION_H_

#include <string>
#include <string_view>
#include <vector>

#include "seclint/checkers/diagnostic.h"

namespace seclint {

// A `/* seclint-deviation: <id> <justification> */` record. It applies to
// diagnostics of that guideline on the following line.
struct Deviation {
  int line = 0;  // line holding the comment
  std::string guideline;
  std::string justification;
};

std::vector<Deviation> ParseDeviations(std::string_view text);

// Marks matching diagnostics suppressed and copies the justification.
void ApplyDeviations(const std::vector<Deviation>& deviations, std::vector<Diagnostic>& diags);

}  // namespace seclint

#endif  // SECLINT_CHECKERS_DEVIATION_H_
