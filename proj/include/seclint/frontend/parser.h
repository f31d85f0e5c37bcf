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

#ifndef SECLINT_FRONTEND_PARSER_H_
#define SECLINT_FRONTEND_PARSER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "seclint/frontend/ast.h"
#include "seclint/frontend/token.h"

namespace seclint {

// Parses the supported C subset. Constructs outside it (goto, switch,
// typedef, unions, enums, bit-fields, function pointers, variadic
// definitions, multi-dimensional arrays, break/continue, labels) raise
// FrontendError(kParseError) naming the construct. Array declarators on
// parameters are preserved on the Parameter node.
TranslationUnit Parse(const TokenList& tokens);

// preprocess + tokenize + parse. The result carries the recorded headers.
TranslationUnit ParseSource(std::string_view source_text,
                            const std::string& path);

// Value of a C integer literal spelling (decimal, octal or hex, with
// optional u/l suffixes). Returns nullopt for malformed spellings.
std::optional<std::int64_t> ParseIntegerLiteral(std::string_view spelling);

}  // namespace seclint

#endif  // SECLINT_FRONTEND_PARSER_H_
