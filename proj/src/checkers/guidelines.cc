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

#include "seclint/checkers/guidelines.h"

#include <algorithm>
#include <array>

namespace seclint {
namespace {

using C = GuidelineCategory;
using F = GuidelineFamily;

constexpr std::array<Guideline, 18> kRegistry = {{
    {"BAN.21_3", C::kRequired, F::kRestrictiveBan,
     "stdlib.h memory allocation and deallocation functions shall not be used"},
    {"BAN.21_5", C::kRequired, F::kRestrictiveBan,
     "signal.h facilities shall not be used"},
    {"BAN.21_6", C::kRequired, F::kRestrictiveBan,
     "stdio.h input/output functions shall not be used"},
    {"BAN.21_8", C::kRequired, F::kRestrictiveBan, "getenv shall not be used"},
    {"SEC.ctype.1", C::kMandatory, F::kCtype,
     "ctype.h arguments shall be representable as unsigned char or be EOF"},
    {"SEC.env.1", C::kMandatory, F::kEnvironment,
     "objects pointed to by environment-function results shall not be modified"},
    {"SEC.env.2", C::kMandatory, F::kEnvironment,
     "environment-function results shall not be used after a subsequent call "
     "to an environment function"},
    {"SEC.eof.1", C::kRequired, F::kEofHandling,
     "EOF shall only be compared with the unmodified int result of a stdio "
     "read"},
    {"SEC.errno.1", C::kRequired, F::kErrno,
     "errno shall be set to zero before calling an errno-setting function"},
    {"SEC.errno.2", C::kRequired, F::kErrno,
     "errno shall be tested after calling an errno-setting function"},
    {"SEC.errno.3", C::kRequired, F::kErrno,
     "errno shall only be tested after an errno-setting function call"},
    {"SEC.extdata.1", C::kDirective, F::kExternalData,
     "data from external sources shall be validated before use"},
    {"SEC.mem.1", C::kRequired, F::kMemCompare,
     "memcmp shall not compare objects of structure type"},
    {"SEC.mem.2", C::kRequired, F::kMemCompare,
     "memcmp shall not compare null-terminated strings"},
    {"SEC.mem.3", C::kRequired, F::kMemCompare,
     "memory comparison and copy sizes shall not exceed the buffers"},
    {"SEC.sizeof.1", C::kMandatory, F::kSizeofArrayParam,
     "sizeof shall not be applied to a function parameter declared as an "
     "array"},
    {"SEC.string.1", C::kMandatory, F::kStringHandling,
     "unbounded string-handling functions shall not be used"},
    {"SEC.string.2", C::kMandatory, F::kStringHandling,
     "bounded string-handling functions shall not access beyond the "
     "destination"},
}};

}  // namespace

const char* GuidelineCategoryName(GuidelineCategory category) {
  switch (category) {
    case C::kDirective: return "directive";
    case C::kMandatory: return "mandatory";
    case C::kRequired: return "required";
  }
  return "?";
}

const char* GuidelineFamilyName(GuidelineFamily family) {
  switch (family) {
    case F::kExternalData: return "validation of external data";
    case F::kSizeofArrayParam: return "sizeof on array-declared parameters";
    case F::kCtype: return "ctype.h functions";
    case F::kMemCompare: return "memory comparison functions";
    case F::kEnvironment: return "environment functions";
    case F::kStringHandling: return "string-handling functions";
    case F::kEofHandling: return "stdio.h I/O functions and EOF";
    case F::kErrno: return "errno handling";
    case F::kRestrictiveBan: return "restrictive bans";
  }
  return "?";
}

std::span<const Guideline> GuidelineRegistry() { return kRegistry; }

const Guideline* FindGuideline(std::string_view id) {
  auto it = std::lower_bound(kRegistry.begin(), kRegistry.end(), id,
                             [](const Guideline& g, std::string_view v) { return g.id < v; });
  if (it == kRegistry.end() || it->id != id) return nullptr;
  return &*it;
}

}  // namespace seclint
