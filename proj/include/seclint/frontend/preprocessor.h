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

#ifndef SECLINT_FRONTEND_PREPROCESSOR_H_
#define SECLINT_FRONTEND_PREPROCESSOR_H_

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "seclint/source_location.h"

namespace seclint {

// Headers whose inclusion is recorded. Anything else is blanked silently.
bool IsRecognizedStandardHeader(std::string_view name);

struct ObjectMacro {
  std::string replacement;
  SourceLocation loc;
};

struct PreprocessedSource {
  std::string path;
  // Same number of lines as the input. Comments and directive lines are
  // blanked so every surviving byte keeps its original line and column.
  std::string text;
  std::set<std::string> included_standard_headers;
  std::map<std::string, ObjectMacro> object_macros;
};

// Strips comments and handles #include, object-like #define, #undef and
// #pragma. Throws FrontendError(kUnsupportedDirective) on function-like
// macros, conditional compilation and any other directive.
PreprocessedSource Preprocess(std::string_view source_text,
                              const std::string& path);

}  // namespace seclint

#endif  // SECLINT_FRONTEND_PREPROCESSOR_H_
