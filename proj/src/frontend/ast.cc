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

#include "seclint/frontend/ast.h"

namespace seclint {

const char* NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kFunctionDef: return "function-def";
    case NodeKind::kFunctionDecl: return "function-decl";
    case NodeKind::kDeclaration: return "declaration";
    case NodeKind::kParameter: return "parameter";
    case NodeKind::kStructDef: return "struct-def";
    case NodeKind::kCompoundStmt: return "compound-stmt";
    case NodeKind::kIf: return "if";
    case NodeKind::kWhile: return "while";
    case NodeKind::kFor: return "for";
    case NodeKind::kDo: return "do";
    case NodeKind::kReturn: return "return";
    case NodeKind::kExpressionStmt: return "expression-stmt";
    case NodeKind::kEmptyStmt: return "empty-stmt";
    case NodeKind::kCall: return "call";
    case NodeKind::kBinaryOp: return "binary-op";
    case NodeKind::kUnaryOp: return "unary-op";
    case NodeKind::kCast: return "cast";
    case NodeKind::kSizeofExpr: return "sizeof-expr";
    case NodeKind::kTypeName: return "type-name";
    case NodeKind::kIdentifierRef: return "identifier-ref";
    case NodeKind::kLiteral: return "literal";
    case NodeKind::kArraySubscript: return "array-subscript";
    case NodeKind::kMemberAccess: return "member-access";
    case NodeKind::kAssignment: return "assignment";
    case NodeKind::kConditional: return "conditional";
    case NodeKind::kInitList: return "init-list";
  }
  return "?";
}

bool AstNode::IsExpression() const {
  switch (kind) {
    case NodeKind::kCall:
    case NodeKind::kBinaryOp:
    case NodeKind::kUnaryOp:
    case NodeKind::kCast:
    case NodeKind::kSizeofExpr:
    case NodeKind::kIdentifierRef:
    case NodeKind::kLiteral:
    case NodeKind::kArraySubscript:
    case NodeKind::kMemberAccess:
    case NodeKind::kAssignment:
    case NodeKind::kConditional:
    case NodeKind::kInitList:
      return true;
    default:
      return false;
  }
}

void Walk(const AstNode& node,
          const std::function<void(const AstNode&)>& visit) {
  visit(node);
  for (const auto& child : node.children) Walk(*child, visit);
}

void Walk(const TranslationUnit& tu,
          const std::function<void(const AstNode&)>& visit) {
  for (const auto& node : tu.top_level) Walk(*node, visit);
}

namespace {

void Dump(const AstNode& node, int depth, std::string& out) {
  out.append(static_cast<size_t>(depth) * 2, ' ');
  out += NodeKindName(node.kind);
  if (!node.text.empty()) out += " '" + node.text + "'";
  if (!node.op.empty()) out += " op=" + node.op;
  if (node.postfix) out += " postfix";
  if (node.kind == NodeKind::kDeclaration || node.kind == NodeKind::kParameter ||
      node.kind == NodeKind::kCast || node.kind == NodeKind::kTypeName ||
      node.kind == NodeKind::kFunctionDef) {
    out += " type=" + node.type.ToString();
  }
  if (node.array_declarator) {
    out += " array-declarator";
    if (node.array_extent) out += "[" + std::to_string(*node.array_extent) + "]";
  }
  if (node.from_standard_macro) {
    out += *node.from_standard_macro == StandardMacro::kEOF ? " macro=EOF"
                                                           : " macro=NULL";
  }
  out += " @" + std::to_string(node.loc.line) + ":" +
         std::to_string(node.loc.column) + "\n";
  for (const auto& child : node.children) Dump(*child, depth + 1, out);
}

}  // namespace

std::string DumpAst(const TranslationUnit& tu) {
  std::string out;
  for (const auto& node : tu.top_level) Dump(*node, 0, out);
  return out;
}

}  // namespace seclint
