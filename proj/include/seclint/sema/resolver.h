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

#ifndef SECLINT_SEMA_RESOLVER_H_
#define SECLINT_SEMA_RESOLVER_H_

#include <string>
#include <vector>

#include "seclint/frontend/ast.h"
#include "seclint/sema/symbols.h"

namespace seclint {

struct SemaNote {
  enum class Kind { kUnresolvedName, kImplicitDeclaration };
  Kind kind;
  SourceLocation loc;
  std::string name;

  std::string ToString() const;
};

struct Resolution {
  SymbolTable symbols;
  std::vector<SemaNote> notes;
};

// Binds identifier references to symbols and tags library calls whose
// header is included. Mutates `tu` in place (resolved_symbol, library).
// Throws FrontendError(kRedeclaration) on conflicting declarations in one
// scope.
Resolution Resolve(TranslationUnit& tu);

}  // namespace seclint

#endif  // SECLINT_SEMA_RESOLVER_H_
