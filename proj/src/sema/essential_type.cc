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

#include "seclint/sema/essential_type.h"

#include <algorithm>
#include <cctype>

#include "seclint/frontend/parser.h"
#include "seclint/sema/library.h"

namespace seclint {
namespace {

TypeDesc Unknown() { return TypeDesc::SignedInt(std::nullopt); }

// Integer promotion for arithmetic results; characters become int.
TypeDesc Promote(const TypeDesc& t) {
  if (t.IsCharacter()) return TypeDesc::SignedInt();
  if (t.category() == TypeCategory::kSignedInt && t.byte_size() && *t.byte_size() < 4) {
    return TypeDesc::SignedInt();
  }
  if (t.category() == TypeCategory::kUnsignedInt && t.byte_size() && *t.byte_size() < 4) {
    return TypeDesc::SignedInt();
  }
  return t.WithConst(false);
}

TypeDesc ArithmeticResult(const TypeDesc& a, const TypeDesc& b) {
  TypeDesc pa = Promote(a);
  TypeDesc pb = Promote(b);
  if (pa.category() == TypeCategory::kFloating || pb.category() == TypeCategory::kFloating) {
    const std::uint64_t size = std::max(pa.category() == TypeCategory::kFloating
                                            ? pa.byte_size().value_or(8) : 0,
                                        pb.category() == TypeCategory::kFloating
                                            ? pb.byte_size().value_or(8) : 0);
    return TypeDesc::Floating(size);
  }
  if (!pa.IsInteger() || !pb.IsInteger()) return Unknown();
  if (!pa.byte_size() || !pb.byte_size()) return Unknown();
  const std::uint64_t size = std::max(*pa.byte_size(), *pb.byte_size());
  const bool is_unsigned = (pa.category() == TypeCategory::kUnsignedInt &&
                            *pa.byte_size() == size) ||
                           (pb.category() == TypeCategory::kUnsignedInt &&
                            *pb.byte_size() == size);
  return is_unsigned ? TypeDesc::UnsignedInt(size) : TypeDesc::SignedInt(size);
}

EssentialType Of(TypeDesc t) { return {std::move(t), false}; }

}  // namespace

const AstNode& StripCasts(const AstNode& expr) {
  const AstNode* e = &expr;
  while (e->kind == NodeKind::kCast) e = e->child(0);
  return *e;
}

const Symbol* BaseVariable(const AstNode& expr) {
  const AstNode& e = StripCasts(expr);
  switch (e.kind) {
    case NodeKind::kIdentifierRef:
      if (e.resolved_symbol && (e.resolved_symbol->kind == SymbolKind::kVariable ||
                                e.resolved_symbol->kind == SymbolKind::kParameter)) {
        return e.resolved_symbol;
      }
      return nullptr;
    case NodeKind::kUnaryOp:
      if (e.op == "&" || e.op == "*") return BaseVariable(*e.child(0));
      return nullptr;
    case NodeKind::kArraySubscript:
    case NodeKind::kMemberAccess:
      return BaseVariable(*e.child(0));
    case NodeKind::kBinaryOp:
      if (e.op == "+" || e.op == "-") return BaseVariable(*e.child(0));
      return nullptr;
    default:
      return nullptr;
  }
}

EssentialType ComputeEssentialType(const AstNode& expr, const SymbolTable& symbols) {
  switch (expr.kind) {
    case NodeKind::kIdentifierRef: {
      const Symbol* s = expr.resolved_symbol;
      if (!s) return Of(Unknown());
      if (s->kind == SymbolKind::kFunction) return Of(s->declared_type);
      return Of(s->declared_type.WithConst(false));
    }
    case NodeKind::kLiteral:
      switch (expr.literal_kind) {
        case LiteralKind::kInteger: {
          std::string_view text = expr.text;
          bool is_unsigned = text.find_first_of("uU") != std::string_view::npos;
          bool is_long = text.find_first_of("lL") != std::string_view::npos;
          const std::uint64_t size = is_long ? 8 : 4;
          return Of(is_unsigned ? TypeDesc::UnsignedInt(size) : TypeDesc::SignedInt(size));
        }
        case LiteralKind::kFloat:
          return Of(TypeDesc::Floating(expr.text.find_first_of("fF") != std::string::npos
                                           ? 4 : 8));
        case LiteralKind::kChar:
          return Of(TypeDesc::PlainChar());
        case LiteralKind::kString: {
          auto size = BufferByteSize(expr, symbols);
          return Of(TypeDesc::ArrayOf(TypeDesc::PlainChar(), size));
        }
      }
      return Of(Unknown());
    case NodeKind::kCall: {
      if (expr.library) {
        return {expr.library->return_type, expr.library->returns_io_int};
      }
      const AstNode& callee = *expr.child(0);
      const TypeDesc fn = ComputeEssentialType(callee, symbols).type;
      if (fn.category() == TypeCategory::kFunction) return Of(fn.element());
      if (fn.IsPointer() && fn.element().category() == TypeCategory::kFunction) {
        return Of(fn.element().element());
      }
      return Of(Unknown());
    }
    case NodeKind::kCast:
      return Of(expr.type.WithConst(false));
    case NodeKind::kSizeofExpr:
      return Of(TypeDesc::Size());
    case NodeKind::kArraySubscript: {
      TypeDesc base = ComputeEssentialType(*expr.child(0), symbols).type;
      if (!base.IsPointerLike()) {
        // index[array] form
        base = ComputeEssentialType(*expr.child(1), symbols).type;
      }
      if (base.IsPointerLike()) return Of(base.element().WithConst(false));
      return Of(Unknown());
    }
    case NodeKind::kMemberAccess: {
      TypeDesc base = ComputeEssentialType(*expr.child(0), symbols).type;
      if (expr.op == "->" && base.IsPointerLike()) base = base.element();
      if (base.category() == TypeCategory::kStruct) {
        if (auto member = symbols.MemberType(base.tag(), expr.text)) {
          return Of(member->WithConst(false));
        }
      }
      return Of(Unknown());
    }
    case NodeKind::kUnaryOp: {
      const EssentialType operand = ComputeEssentialType(*expr.child(0), symbols);
      if (expr.op == "&") return Of(TypeDesc::PointerTo(operand.type));
      if (expr.op == "*") {
        if (operand.type.IsPointerLike()) return Of(operand.type.element().WithConst(false));
        return Of(Unknown());
      }
      if (expr.op == "!") return Of(TypeDesc::SignedInt());
      if (expr.op == "++" || expr.op == "--") return Of(operand.type);
      // + - ~ keep the operand's category (characters are not promoted).
      return Of(operand.type);
    }
    case NodeKind::kBinaryOp: {
      const std::string& op = expr.op;
      if (op == ",") return ComputeEssentialType(*expr.child(1), symbols);
      if (op == "==" || op == "!=" || op == "<" || op == ">" || op == "<=" ||
          op == ">=" || op == "&&" || op == "||") {
        return Of(TypeDesc::SignedInt());
      }
      const TypeDesc lhs = ComputeEssentialType(*expr.child(0), symbols).type;
      const TypeDesc rhs = ComputeEssentialType(*expr.child(1), symbols).type;
      if (op == "+" || op == "-") {
        if (lhs.IsPointerLike() && rhs.IsPointerLike()) return Of(TypeDesc::SignedInt(8));
        if (lhs.IsPointerLike()) return Of(lhs.Decay());
        if (rhs.IsPointerLike() && op == "+") return Of(rhs.Decay());
      }
      if (op == "<<" || op == ">>") return Of(Promote(lhs));
      return Of(ArithmeticResult(lhs, rhs));
    }
    case NodeKind::kAssignment:
      return Of(ComputeEssentialType(*expr.child(0), symbols).type);
    case NodeKind::kConditional:
      return ComputeEssentialType(*expr.child(1), symbols);
    default:
      return Of(Unknown());
  }
}

std::optional<std::int64_t> FoldIntegerConstant(const AstNode& expr,
                                                const SymbolTable& symbols) {
  switch (expr.kind) {
    case NodeKind::kLiteral:
      if (expr.literal_kind == LiteralKind::kInteger) return ParseIntegerLiteral(expr.text);
      return std::nullopt;
    case NodeKind::kCast:
      if (!expr.type.IsInteger()) return std::nullopt;
      return FoldIntegerConstant(*expr.child(0), symbols);
    case NodeKind::kUnaryOp: {
      if (expr.op != "-" && expr.op != "+") return std::nullopt;
      auto v = FoldIntegerConstant(*expr.child(0), symbols);
      if (!v) return std::nullopt;
      return expr.op == "-" ? -*v : *v;
    }
    case NodeKind::kSizeofExpr: {
      const AstNode& operand = *expr.child(0);
      const TypeDesc t = operand.kind == NodeKind::kTypeName
                             ? operand.type
                             : ComputeEssentialType(operand, symbols).type;
      if (t.byte_size()) return static_cast<std::int64_t>(*t.byte_size());
      return std::nullopt;
    }
    case NodeKind::kBinaryOp: {
      if (expr.op != "+" && expr.op != "-" && expr.op != "*") return std::nullopt;
      auto a = FoldIntegerConstant(*expr.child(0), symbols);
      auto b = FoldIntegerConstant(*expr.child(1), symbols);
      if (!a || !b) return std::nullopt;
      if (expr.op == "+") return *a + *b;
      if (expr.op == "-") return *a - *b;
      return *a * *b;
    }
    default:
      return std::nullopt;
  }
}

std::optional<std::uint64_t> BufferByteSize(const AstNode& arg, const SymbolTable& symbols) {
  const AstNode& e = StripCasts(arg);
  if (e.kind == NodeKind::kLiteral && e.literal_kind == LiteralKind::kString) {
    std::uint64_t n = 0;
    bool in = false;
    for (size_t i = 0; i < e.text.size(); ++i) {
      const char c = e.text[i];
      if (c == '"') {
        in = !in;
        continue;
      }
      if (!in) continue;
      if (c == '\\' && i + 1 < e.text.size()) {
        const char esc = e.text[++i];
        if (esc == 'x') {
          while (i + 1 < e.text.size() && std::isxdigit(static_cast<unsigned char>(e.text[i + 1]))) ++i;
        } else if (esc >= '0' && esc <= '7') {
          for (int k = 0; k < 2 && i + 1 < e.text.size() && e.text[i + 1] >= '0' &&
                          e.text[i + 1] <= '7'; ++k) {
            ++i;
          }
        }
      }
      ++n;
    }
    return n + 1;
  }
  if (e.kind == NodeKind::kIdentifierRef) {
    const TypeDesc t = ComputeEssentialType(e, symbols).type;
    if (t.IsArray()) return t.byte_size();
    return std::nullopt;
  }
  if (e.kind == NodeKind::kUnaryOp && e.op == "&") {
    const TypeDesc t = ComputeEssentialType(*e.child(0), symbols).type;
    return t.byte_size();
  }
  return std::nullopt;
}

}  // namespace seclint
