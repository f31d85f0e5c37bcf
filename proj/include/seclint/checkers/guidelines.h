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

#ifndef SECLINT_CHECKERS_GUIDELINES_H_
#define SECLINT_CHECKERS_GUIDELINES_H_

#include <span>
#include <string_view>

namespace seclint {

enum class GuidelineCategory { kDirective, kMandatory, kRequired };

const char* GuidelineCategoryName(GuidelineCategory category);

// The eight security guideline families plus the restrictive bans.
enum class GuidelineFamily {
  kExternalData,
  kSizeofArrayParam,
  kCtype,
  kMemCompare,
  kEnvironment,
  kStringHandling,
  kEofHandling,
  kErrno,
  kRestrictiveBan,
};

const char* GuidelineFamilyName(GuidelineFamily family);

struct Guideline {
  std::string_view id;
  GuidelineCategory category;
  GuidelineFamily family;
  std::string_view title;

  bool is_ban() const { return family == GuidelineFamily::kRestrictiveBan; }
};

// All shipped guidelines, ordered by id.
std::span<const Guideline> GuidelineRegistry();

const Guideline* FindGuideline(std::string_view id);

namespace guideline_ids {
inline constexpr std::string_view kExternalData = "SEC.extdata.1";
inline constexpr std::string_view kSizeofArrayParam = "SEC.sizeof.1";
inline constexpr std::string_view kCtypeArg = "SEC.ctype.1";
inline constexpr std::string_view kMemcmpStruct = "SEC.mem.1";
inline constexpr std::string_view kMemcmpString = "SEC.mem.2";
inline constexpr std::string_view kMemSizeExceeds = "SEC.mem.3";
inline constexpr std::string_view kEnvWrite = "SEC.env.1";
inline constexpr std::string_view kEnvStale = "SEC.env.2";
inline constexpr std::string_view kStringUnbounded = "SEC.string.1";
inline constexpr std::string_view kStringBound = "SEC.string.2";
inline constexpr std::string_view kEofCompare = "SEC.eof.1";
inline constexpr std::string_view kErrnoNotZeroed = "SEC.errno.1";
inline constexpr std::string_view kErrnoUnchecked = "SEC.errno.2";
inline constexpr std::string_view kErrnoSpuriousTest = "SEC.errno.3";
inline constexpr std::string_view kBanMemAlloc = "BAN.21_3";
inline constexpr std::string_view kBanSignal = "BAN.21_5";
inline constexpr std::string_view kBanStdio = "BAN.21_6";
inline constexpr std::string_view kBanGetenv = "BAN.21_8";
}  // namespace guideline_ids

}  // namespace seclint

#endif  // SECLINT_CHECKERS_GUIDELINES_H_
