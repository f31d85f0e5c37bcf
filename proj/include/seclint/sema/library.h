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

#ifndef SECLINT_SEMA_LIBRARY_H_
#define SECLINT_SEMA_LIBRARY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "seclint/type.h"

namespace seclint {

enum class LibraryFamily : std::uint8_t {
  kCtypeClassify,
  kMemCompareCopy,
  kStringUnbounded,
  kStringBounded,
  kStdioRead,
  kStdioOther,
  kEnvPointerReturning,
  kErrnoSetting,
  kMemAlloc,
  kSignalApi,
  kProcessControl,
};

const char* LibraryFamilyName(LibraryFamily family);

enum class ParamRole : std::uint8_t {
  kBuffer,
  kSize,
  kCharArg,
  kFormatString,
  kOther,
};

class FamilySet {
 public:
  constexpr FamilySet() = default;
  constexpr FamilySet(std::initializer_list<LibraryFamily> families) {
    for (LibraryFamily f : families) bits_ |= Bit(f);
  }
  constexpr bool Has(LibraryFamily f) const { return (bits_ & Bit(f)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }

 private:
  static constexpr std::uint32_t Bit(LibraryFamily f) {
    return std::uint32_t{1} << static_cast<unsigned>(f);
  }
  std::uint32_t bits_ = 0;
};

// One standard library function the checkers know about. Functions with an
// empty family set are only known to be declared by their header.
struct LibraryFunctionInfo {
  std::string_view name;
  std::string_view header;
  FamilySet families;
  std::vector<ParamRole> param_roles;
  // Role of arguments past the fixed parameters (variadic functions).
  std::optional<ParamRole> variadic_role;
  bool returns_io_int = false;
  bool returns_env_pointer = false;
  TypeDesc return_type;

  bool Has(LibraryFamily f) const { return families.Has(f); }
  ParamRole RoleOf(size_t arg_index) const;
  // Index of the first Size-role parameter, if any.
  std::optional<size_t> SizeParam() const;
};

std::span<const LibraryFunctionInfo> LibraryTable();

// Lookup by name regardless of header; nullptr when unknown.
const LibraryFunctionInfo* FindLibraryFunction(std::string_view name);

}  // namespace seclint

#endif  // SECLINT_SEMA_LIBRARY_H_
