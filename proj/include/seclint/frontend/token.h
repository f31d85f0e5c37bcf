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

#ifndef SECLINT_FRONTEND_TOKEN_H_
#define SECLINT_FRONTEND_TOKEN_H_

#include <optional>
#include <string_view>
#include <string>
#include <vector>

#include "seclint/source_location.h"

namespace seclint {

enum class TokenKind {
  kIdentifier,
  kKeyword,
  kIntegerLiteral,
  kFloatLiteral,
  kCharLiteral,
  kStringLiteral,
  kPunctuator,
  kEofMarker,
};

const char* TokenKindName(TokenKind kind);

// The built-in object-like macros the lexer expands itself.
enum class StandardMacro { kEOF, kNULL };

struct Token {
  TokenKind kind = TokenKind::kEofMarker;
  std::string text;
  SourceLocation loc;
  std::optional<StandardMacro> from_standard_macro;

  bool Is(TokenKind k, std::string_view t) const {
    return kind == k && text == t;
  }
  bool IsPunct(std::string_view t) const {
    return Is(TokenKind::kPunctuator, t);
  }
  bool IsKeyword(std::string_view t) const {
    return Is(TokenKind::kKeyword, t);
  }
};

using TokenList = std::vector<Token>;

}  // namespace seclint

#endif  // SECLINT_FRONTEND_TOKEN_H_
