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

#include "seclint/checkers/deviation.h"

#include <regex>

namespace seclint {

std::vector<Deviation> ParseDeviations(std::string_view text) {
  static const std::regex kPattern(R"(/\*\s*seclint-deviation:\s*(\S+)\s+(.*?)\s*\*/)");
  std::vector<Deviation> out;
  int line = 1;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string current(text.substr(start, end - start));
    for (std::sregex_iterator it(current.begin(), current.end(), kPattern), last; it != last;
         ++it) {
      if ((*it)[2].length() == 0) continue;  // a justification is mandatory
      out.push_back({line, (*it)[1].str(), (*it)[2].str()});
    }
    ++line;
    start = end + 1;
  }
  return out;
}

void ApplyDeviations(const std::vector<Deviation>& deviations, std::vector<Diagnostic>& diags) {
  for (Diagnostic& d : diags) {
    for (const Deviation& dev : deviations) {
      if (d.loc.line == dev.line + 1 && d.guideline && d.guideline->id == dev.guideline) {
        d.suppressed = true;
        d.justification = dev.justification;
        break;
      }
    }
  }
}

}  // namespace seclint
