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

#ifndef SECLINT_FRONTEND_ERRORS_H_
#define SECLINT_FRONTEND_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

#include "seclint/source_location.h"

namespace seclint {

// Raised by the frontend and by name resolution. The analysis of a file
// stops at the first error; the driver maps all of these to InputError.
class FrontendError : public std::runtime_error {
 public:
  enum class Kind {
    kUnsupportedDirective,
    kLexError,
    kParseError,
    kRedeclaration,
  };

  FrontendError(Kind kind, SourceLocation loc, const std::string& message)
      : std::runtime_error(loc.ToString() + ": " + KindName(kind) + ": " +
                           message),
        kind_(kind),
        loc_(std::move(loc)),
        detail_(message) {}

  Kind kind() const { return kind_; }
  const SourceLocation& loc() const { return loc_; }
  const std::string& detail() const { return detail_; }

  static const char* KindName(Kind kind) {
    switch (kind) {
      case Kind::kUnsupportedDirective: return "unsupported directive";
      case Kind::kLexError: return "lex error";
      case Kind::kParseError: return "parse error";
      case Kind::kRedeclaration: return "redeclaration";
    }
    return "error";
  }

 private:
  Kind kind_;
  SourceLocation loc_;
  std::string detail_;
};

}  // namespace seclint

#endif  // SECLINT_FRONTEND_ERRORS_H_
