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

#ifndef SECLINT_SEMA_ESSENTIAL_TYPE_H_
#define SECLINT_SEMA_ESSENTIAL_TYPE_H_

#include <cstdint>
#include <optional>

#include "seclint/frontend/ast.h"
#include "seclint/sema/symbols.h"
#include "seclint/type.h"

namespace seclint {

struct EssentialType {
  TypeDesc type;
  // The value is the unconverted int result of a stdio read (EOF or an
  // unsigned char value).
  bool io_int = false;
};

// Type classification after the usual unary conversions, except that the
// three character categories are preserved. Total: unknown constructs
// classify as SignedInt with no byte size.
EssentialType ComputeEssentialType(const AstNode& expr, const SymbolTable& symbols);

// Integer constant folding: literals, unary +/-, casts, sizeof of a known
// size, and + - * over those.
std::optional<std::int64_t> FoldIntegerConstant(const AstNode& expr,
                                                const SymbolTable& symbols);

// Size in bytes of the object a buffer argument designates: an array name,
// `&object`, or a string literal. nullopt when not statically known.
std::optional<std::uint64_t> BufferByteSize(const AstNode& arg,
                                            const SymbolTable& symbols);

// Strips casts.
const AstNode& StripCasts(const AstNode& expr);

// The variable an lvalue-ish expression names directly (`x`, `&x`, `x[i]`,
// `*x`, `x.m`, `x + k`), or nullptr.
const Symbol* BaseVariable(const AstNode& expr);

}  // namespace seclint

#endif  // SECLINT_SEMA_ESSENTIAL_TYPE_H_
