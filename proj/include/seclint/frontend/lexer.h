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

#ifndef SECLINT_FRONTEND_LEXER_H_
#define SECLINT_FRONTEND_LEXER_H_

#include <string_view>

#include "seclint/frontend/preprocessor.h"
#include "seclint/frontend/token.h"

namespace seclint {

bool IsKeyword(std::string_view word);

// Produces the token stream for a preprocessed file. Object-like macros are
// expanded one level; EOF (when stdio.h is included) and NULL (when any
// recognized header is included) become integer literals -1 and 0 carrying
// their macro provenance. The list always ends with one kEofMarker.
// Throws FrontendError(kLexError).
TokenList Tokenize(const PreprocessedSource& source);

}  // namespace seclint

#endif  // SECLINT_FRONTEND_LEXER_H_
