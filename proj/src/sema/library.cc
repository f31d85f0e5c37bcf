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

#include "seclint/sema/library.h"

#include <algorithm>

namespace seclint {
namespace {

using F = LibraryFamily;
using R = ParamRole;

TypeDesc Int() { return TypeDesc::SignedInt(); }
TypeDesc Long() { return TypeDesc::SignedInt(8); }
TypeDesc ULong() { return TypeDesc::UnsignedInt(8); }
TypeDesc CharPtr() { return TypeDesc::PointerTo(TypeDesc::PlainChar()); }
TypeDesc VoidPtr() { return TypeDesc::PointerTo(TypeDesc::Void()); }
TypeDesc FilePtr() { return TypeDesc::PointerTo(TypeDesc::Struct("FILE")); }

struct Builder {
  LibraryFunctionInfo info;
  Builder(std::string_view name, std::string_view header, FamilySet families,
          std::vector<ParamRole> roles, TypeDesc ret) {
    info.name = name;
    info.header = header;
    info.families = families;
    info.param_roles = std::move(roles);
    info.return_type = std::move(ret);
  }
  Builder& Variadic(ParamRole role) {
    info.variadic_role = role;
    return *this;
  }
  Builder& IoInt() {
    info.returns_io_int = true;
    return *this;
  }
  Builder& EnvPointer() {
    info.returns_env_pointer = true;
    return *this;
  }
  operator LibraryFunctionInfo() const { return info; }
};

std::vector<LibraryFunctionInfo> BuildTable() {
  std::vector<LibraryFunctionInfo> t;
  for (std::string_view name :
       {"isalnum", "isalpha", "isblank", "iscntrl", "isdigit", "isgraph",
        "islower", "isprint", "ispunct", "isspace", "isupper", "isxdigit",
        "tolower", "toupper"}) {
    t.push_back(Builder(name, "ctype.h", {F::kCtypeClassify}, {R::kCharArg}, Int()));
  }

  t.push_back(Builder("memcmp", "string.h", {F::kMemCompareCopy},
                      {R::kBuffer, R::kBuffer, R::kSize}, Int()));
  t.push_back(Builder("memcpy", "string.h", {F::kMemCompareCopy},
                      {R::kBuffer, R::kBuffer, R::kSize}, VoidPtr()));
  t.push_back(Builder("memmove", "string.h", {F::kMemCompareCopy},
                      {R::kBuffer, R::kBuffer, R::kSize}, VoidPtr()));

  t.push_back(Builder("strcpy", "string.h", {F::kStringUnbounded},
                      {R::kBuffer, R::kBuffer}, CharPtr()));
  t.push_back(Builder("strcat", "string.h", {F::kStringUnbounded},
                      {R::kBuffer, R::kBuffer}, CharPtr()));
  t.push_back(Builder("sprintf", "stdio.h", {F::kStringUnbounded},
                      {R::kBuffer, R::kFormatString}, Int())
                  .Variadic(R::kOther));
  t.push_back(Builder("gets", "stdio.h", {F::kStringUnbounded, F::kStdioRead},
                      {R::kBuffer}, CharPtr()));

  t.push_back(Builder("strncpy", "string.h", {F::kStringBounded},
                      {R::kBuffer, R::kBuffer, R::kSize}, CharPtr()));
  t.push_back(Builder("strncat", "string.h", {F::kStringBounded},
                      {R::kBuffer, R::kBuffer, R::kSize}, CharPtr()));
  t.push_back(Builder("snprintf", "stdio.h", {F::kStringBounded},
                      {R::kBuffer, R::kSize, R::kFormatString}, Int())
                  .Variadic(R::kOther));

  t.push_back(Builder("fgetc", "stdio.h", {F::kStdioRead}, {R::kOther}, Int()).IoInt());
  t.push_back(Builder("getc", "stdio.h", {F::kStdioRead}, {R::kOther}, Int()).IoInt());
  t.push_back(Builder("getchar", "stdio.h", {F::kStdioRead}, {}, Int()).IoInt());
  t.push_back(Builder("fgets", "stdio.h", {F::kStdioRead},
                      {R::kBuffer, R::kSize, R::kOther}, CharPtr()));
  t.push_back(Builder("fread", "stdio.h", {F::kStdioRead},
                      {R::kBuffer, R::kSize, R::kSize, R::kOther}, ULong()));
  t.push_back(Builder("fscanf", "stdio.h", {F::kStdioRead},
                      {R::kOther, R::kFormatString}, Int())
                  .Variadic(R::kBuffer));
  t.push_back(Builder("scanf", "stdio.h", {F::kStdioRead}, {R::kFormatString}, Int())
                  .Variadic(R::kBuffer));

  t.push_back(Builder("printf", "stdio.h", {F::kStdioOther}, {R::kFormatString}, Int())
                  .Variadic(R::kOther));
  t.push_back(Builder("fprintf", "stdio.h", {F::kStdioOther},
                      {R::kOther, R::kFormatString}, Int())
                  .Variadic(R::kOther));
  t.push_back(Builder("sscanf", "stdio.h", {F::kStdioOther},
                      {R::kOther, R::kFormatString}, Int())
                  .Variadic(R::kOther));
  t.push_back(Builder("puts", "stdio.h", {F::kStdioOther}, {R::kOther}, Int()));
  t.push_back(Builder("fputs", "stdio.h", {F::kStdioOther}, {R::kOther, R::kOther}, Int()));
  t.push_back(Builder("putchar", "stdio.h", {F::kStdioOther}, {R::kOther}, Int()));
  t.push_back(Builder("putc", "stdio.h", {F::kStdioOther}, {R::kOther, R::kOther}, Int()));
  t.push_back(Builder("fputc", "stdio.h", {F::kStdioOther}, {R::kOther, R::kOther}, Int()));
  t.push_back(Builder("ungetc", "stdio.h", {F::kStdioOther}, {R::kOther, R::kOther}, Int()));
  t.push_back(Builder("fopen", "stdio.h", {F::kStdioOther}, {R::kOther, R::kOther}, FilePtr()));
  t.push_back(Builder("fclose", "stdio.h", {F::kStdioOther}, {R::kOther}, Int()));
  t.push_back(Builder("fflush", "stdio.h", {F::kStdioOther}, {R::kOther}, Int()));
  t.push_back(Builder("fwrite", "stdio.h", {F::kStdioOther},
                      {R::kBuffer, R::kSize, R::kSize, R::kOther}, ULong()));
  t.push_back(Builder("fseek", "stdio.h", {F::kStdioOther},
                      {R::kOther, R::kOther, R::kOther}, Int()));
  t.push_back(Builder("rewind", "stdio.h", {F::kStdioOther}, {R::kOther}, TypeDesc::Void()));
  t.push_back(Builder("feof", "stdio.h", {F::kStdioOther}, {R::kOther}, Int()));
  t.push_back(Builder("ferror", "stdio.h", {F::kStdioOther}, {R::kOther}, Int()));
  t.push_back(Builder("perror", "stdio.h", {F::kStdioOther}, {R::kOther}, TypeDesc::Void()));
  t.push_back(Builder("remove", "stdio.h", {F::kStdioOther}, {R::kOther}, Int()));
  t.push_back(Builder("rename", "stdio.h", {F::kStdioOther}, {R::kOther, R::kOther}, Int()));

  t.push_back(Builder("getenv", "stdlib.h",
                      {F::kEnvPointerReturning, F::kProcessControl}, {R::kOther},
                      CharPtr())
                  .EnvPointer());
  t.push_back(Builder("setlocale", "locale.h", {F::kEnvPointerReturning},
                      {R::kOther, R::kOther}, CharPtr())
                  .EnvPointer());
  t.push_back(Builder("localeconv", "locale.h", {F::kEnvPointerReturning}, {},
                      TypeDesc::PointerTo(TypeDesc::Struct("lconv")))
                  .EnvPointer());
  t.push_back(Builder("strerror", "string.h", {F::kEnvPointerReturning},
                      {R::kOther}, CharPtr())
                  .EnvPointer());

  t.push_back(Builder("strtol", "stdlib.h", {F::kErrnoSetting},
                      {R::kOther, R::kOther, R::kOther}, Long()));
  t.push_back(Builder("strtoul", "stdlib.h", {F::kErrnoSetting},
                      {R::kOther, R::kOther, R::kOther}, ULong()));
  t.push_back(Builder("strtod", "stdlib.h", {F::kErrnoSetting},
                      {R::kOther, R::kOther}, TypeDesc::Floating()));
  t.push_back(Builder("ftell", "stdio.h", {F::kErrnoSetting}, {R::kOther}, Long()));
  t.push_back(Builder("fgetpos", "stdio.h", {F::kErrnoSetting},
                      {R::kOther, R::kOther}, Int()));
  t.push_back(Builder("fsetpos", "stdio.h", {F::kErrnoSetting},
                      {R::kOther, R::kOther}, Int()));

  t.push_back(Builder("malloc", "stdlib.h", {F::kMemAlloc}, {R::kSize}, VoidPtr()));
  t.push_back(Builder("calloc", "stdlib.h", {F::kMemAlloc}, {R::kSize, R::kSize}, VoidPtr()));
  t.push_back(Builder("realloc", "stdlib.h", {F::kMemAlloc}, {R::kOther, R::kSize}, VoidPtr()));
  t.push_back(Builder("free", "stdlib.h", {F::kMemAlloc}, {R::kOther}, TypeDesc::Void()));

  t.push_back(Builder("signal", "signal.h", {F::kSignalApi}, {R::kOther, R::kOther}, VoidPtr()));
  t.push_back(Builder("raise", "signal.h", {F::kSignalApi}, {R::kOther}, Int()));

  t.push_back(Builder("system", "stdlib.h", {F::kProcessControl}, {R::kOther}, Int()));
  t.push_back(Builder("abort", "stdlib.h", {F::kProcessControl}, {}, TypeDesc::Void()));
  t.push_back(Builder("exit", "stdlib.h", {F::kProcessControl}, {R::kOther}, TypeDesc::Void()));

  // Declared by their headers but outside every rule family.
  t.push_back(Builder("atoi", "stdlib.h", {}, {R::kOther}, Int()));
  t.push_back(Builder("atol", "stdlib.h", {}, {R::kOther}, Long()));
  t.push_back(Builder("atof", "stdlib.h", {}, {R::kOther}, TypeDesc::Floating()));
  t.push_back(Builder("abs", "stdlib.h", {}, {R::kOther}, Int()));
  t.push_back(Builder("labs", "stdlib.h", {}, {R::kOther}, Long()));
  t.push_back(Builder("rand", "stdlib.h", {}, {}, Int()));
  t.push_back(Builder("srand", "stdlib.h", {}, {R::kOther}, TypeDesc::Void()));
  t.push_back(Builder("strlen", "string.h", {}, {R::kOther}, TypeDesc::Size()));
  t.push_back(Builder("strcmp", "string.h", {}, {R::kOther, R::kOther}, Int()));
  t.push_back(Builder("strncmp", "string.h", {}, {R::kOther, R::kOther, R::kOther}, Int()));
  t.push_back(Builder("strchr", "string.h", {}, {R::kOther, R::kOther}, CharPtr()));
  t.push_back(Builder("strrchr", "string.h", {}, {R::kOther, R::kOther}, CharPtr()));
  t.push_back(Builder("strstr", "string.h", {}, {R::kOther, R::kOther}, CharPtr()));
  t.push_back(Builder("strspn", "string.h", {}, {R::kOther, R::kOther}, TypeDesc::Size()));
  t.push_back(Builder("strcspn", "string.h", {}, {R::kOther, R::kOther}, TypeDesc::Size()));
  t.push_back(Builder("memset", "string.h", {}, {R::kBuffer, R::kOther, R::kSize}, VoidPtr()));
  t.push_back(Builder("memchr", "string.h", {}, {R::kBuffer, R::kOther, R::kSize}, VoidPtr()));
  t.push_back(Builder("assert", "assert.h", {}, {R::kOther}, TypeDesc::Void()));
  t.push_back(Builder("sqrt", "math.h", {}, {R::kOther}, TypeDesc::Floating()));
  t.push_back(Builder("fabs", "math.h", {}, {R::kOther}, TypeDesc::Floating()));
  t.push_back(Builder("time", "time.h", {}, {R::kOther}, Long()));
  t.push_back(Builder("clock", "time.h", {}, {}, Long()));

  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    return a.name < b.name;
  });
  return t;
}

const std::vector<LibraryFunctionInfo>& Table() {
  static const std::vector<LibraryFunctionInfo> table = BuildTable();
  return table;
}

}  // namespace

const char* LibraryFamilyName(LibraryFamily family) {
  switch (family) {
    case F::kCtypeClassify: return "CtypeClassify";
    case F::kMemCompareCopy: return "MemCompareCopy";
    case F::kStringUnbounded: return "StringUnbounded";
    case F::kStringBounded: return "StringBounded";
    case F::kStdioRead: return "StdioRead";
    case F::kStdioOther: return "StdioOther";
    case F::kEnvPointerReturning: return "EnvPointerReturning";
    case F::kErrnoSetting: return "ErrnoSetting";
    case F::kMemAlloc: return "MemAlloc";
    case F::kSignalApi: return "SignalApi";
    case F::kProcessControl: return "ProcessControl";
  }
  return "?";
}

ParamRole LibraryFunctionInfo::RoleOf(size_t arg_index) const {
  if (arg_index < param_roles.size()) return param_roles[arg_index];
  return variadic_role.value_or(ParamRole::kOther);
}

std::optional<size_t> LibraryFunctionInfo::SizeParam() const {
  for (size_t i = 0; i < param_roles.size(); ++i) {
    if (param_roles[i] == ParamRole::kSize) return i;
  }
  return std::nullopt;
}

std::span<const LibraryFunctionInfo> LibraryTable() { return Table(); }

const LibraryFunctionInfo* FindLibraryFunction(std::string_view name) {
  const auto& table = Table();
  auto it = std::lower_bound(
      table.begin(), table.end(), name,
      [](const LibraryFunctionInfo& info, std::string_view n) { return info.name < n; });
  if (it == table.end() || it->name != name) return nullptr;
  return &*it;
}

}  // namespace seclint
