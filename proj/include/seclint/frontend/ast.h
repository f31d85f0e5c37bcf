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

#ifndef SECLINT_FRONTEND_AST_H_
#define SECLINT_FRONTEND_AST_H_

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "seclint/frontend/token.h"
#include "seclint/source_location.h"
#include "seclint/type.h"

namespace seclint {

struct Symbol;
struct LibraryFunctionInfo;

enum class NodeKind {
  kFunctionDef,
  kFunctionDecl,  // prototype
  kDeclaration,
  kParameter,
  kStructDef,
  kCompoundStmt,
  kIf,
  kWhile,
  kFor,
  kDo,
  kReturn,
  kExpressionStmt,
  kEmptyStmt,
  kCall,
  kBinaryOp,
  kUnaryOp,
  kCast,
  kSizeofExpr,
  kTypeName,
  kIdentifierRef,
  kLiteral,
  kArraySubscript,
  kMemberAccess,
  kAssignment,
  kConditional,
  kInitList,
};

const char* NodeKindName(NodeKind kind);

enum class LiteralKind { kInteger, kFloat, kChar, kString };

// Child layout by kind:
//   FunctionDef     params..., body (CompoundStmt, always last)
//   FunctionDecl    params...
//   Declaration     [initializer]
//   StructDef       member Declarations...
//   If              cond, then, [else]
//   While           cond, body
//   For             init, cond, step, body (absent parts are EmptyStmt)
//   Do              body, cond
//   Return          [expr]
//   ExpressionStmt  expr
//   Call            callee, args...
//   BinaryOp        lhs, rhs (op holds the operator, incl. "," "&&" "||")
//   UnaryOp         operand (op holds the operator; postfix for x++/x--)
//   Cast            operand (type holds the target type)
//   SizeofExpr      operand expression or TypeName
//   ArraySubscript  base, index
//   MemberAccess    base (text = member name, op = "." or "->")
//   Assignment      lhs, rhs (op = "=", "+=", ...)
//   Conditional     cond, then, else
//   InitList        elements...
struct AstNode {
  NodeKind kind;
  SourceLocation loc;
  // Identifier / declared name / member name / literal spelling.
  std::string text;
  std::string op;
  bool postfix = false;
  LiteralKind literal_kind = LiteralKind::kInteger;
  std::optional<StandardMacro> from_standard_macro;
  // Declared type (declarations, parameters, function return type, struct
  // members), target type (casts) or named type (TypeName).
  TypeDesc type;
  // Parameters written with array syntax keep it here; `type` holds the
  // adjusted pointer type.
  bool array_declarator = false;
  std::optional<std::uint64_t> array_extent;
  bool is_extern = false;
  bool is_variadic = false;
  std::vector<std::unique_ptr<AstNode>> children;

  // Filled in by name resolution.
  const Symbol* resolved_symbol = nullptr;
  const LibraryFunctionInfo* library = nullptr;

  int id = 0;

  AstNode(NodeKind k, SourceLocation l) : kind(k), loc(std::move(l)) {}

  AstNode* child(size_t i) const { return children[i].get(); }
  size_t size() const { return children.size(); }
  AstNode* Add(std::unique_ptr<AstNode> node) {
    children.push_back(std::move(node));
    return children.back().get();
  }

  bool IsExpression() const;
};

struct TranslationUnit {
  std::string path;
  std::set<std::string> included_standard_headers;
  std::vector<std::unique_ptr<AstNode>> top_level;
  int node_count = 0;
};

// Pre-order traversal over a subtree.
void Walk(const AstNode& node, const std::function<void(const AstNode&)>& visit);
void Walk(const TranslationUnit& tu,
          const std::function<void(const AstNode&)>& visit);

// Structural dump, one node per line, used by determinism tests and
// debugging.
std::string DumpAst(const TranslationUnit& tu);

}  // namespace seclint

#endif  // SECLINT_FRONTEND_AST_H_
