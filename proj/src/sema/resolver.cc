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

#include "seclint/sema/resolver.h"

#include <set>

#include "seclint/frontend/errors.h"
#include "seclint/sema/library.h"

namespace seclint {

const char* SymbolKindName(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::kVariable: return "variable";
    case SymbolKind::kParameter: return "parameter";
    case SymbolKind::kFunction: return "function";
    case SymbolKind::kStructTag: return "struct tag";
  }
  return "?";
}

std::optional<TypeDesc> SymbolTable::MemberType(const std::string& tag,
                                                const std::string& member) const {
  auto it = structs_.find(tag);
  if (it == structs_.end()) return std::nullopt;
  for (const StructMember& m : it->second) {
    if (m.name == member) return m.type;
  }
  return std::nullopt;
}

std::string SemaNote::ToString() const {
  const char* what = kind == Kind::kUnresolvedName ? "unresolved name"
                                                   : "implicit declaration of function";
  return loc.ToString() + ": note: " + what + " '" + name + "'";
}

namespace {

class Resolver {
 public:
  Resolver(TranslationUnit& tu, Resolution& out) : tu_(tu), out_(out) {}

  void Run() {
    for (const auto& node : tu_.top_level) {
      if (node->kind == NodeKind::kFunctionDef) defined_functions_.insert(node->text);
    }
    PushScope(0);
    for (auto& node : tu_.top_level) ResolveTopLevel(*node);
    PopScope();
  }

 private:
  struct Scope {
    int id;
    std::map<std::string, Symbol*> names;
  };

  void PushScope(int id) { scopes_.push_back({id, {}}); }
  void PushScope() { PushScope(next_scope_id_++); }
  void PopScope() { scopes_.pop_back(); }

  Symbol* Lookup(const std::string& name) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->names.find(name);
      if (found != it->names.end()) return found->second;
    }
    return nullptr;
  }

  [[noreturn]] void Redeclared(const AstNode& node, const Symbol& previous) {
    throw FrontendError(FrontendError::Kind::kRedeclaration, node.loc,
                        "'" + node.text + "' redeclared; previous declaration at " +
                            previous.decl_loc.ToString());
  }

  Symbol* Declare(AstNode& node, SymbolKind kind, const TypeDesc& type) {
    Scope& scope = scopes_.back();
    auto existing = scope.names.find(node.text);
    if (existing != scope.names.end()) {
      Symbol* prev = existing->second;
      if (kind == SymbolKind::kFunction && prev->kind == SymbolKind::kFunction) {
        if (node.kind == NodeKind::kFunctionDef) {
          if (prev->is_defined) Redeclared(node, *prev);
          prev->is_defined = true;
          prev->decl = &node;
          prev->decl_loc = node.loc;
        }
        node.resolved_symbol = prev;
        return prev;
      }
      const bool prev_extern = prev->decl && prev->decl->is_extern;
      if (scope.id == 0 && kind == SymbolKind::kVariable &&
          prev->kind == SymbolKind::kVariable && (prev_extern || node.is_extern)) {
        if (!node.is_extern) {
          prev->decl = &node;
          prev->decl_loc = node.loc;
        }
        node.resolved_symbol = prev;
        return prev;
      }
      Redeclared(node, *prev);
    }
    Symbol symbol;
    symbol.name = node.text;
    symbol.kind = kind;
    symbol.declared_type = type;
    symbol.is_array_declared_parameter =
        kind == SymbolKind::kParameter && node.array_declarator;
    symbol.scope_id = scope.id;
    symbol.decl_loc = node.loc;
    symbol.decl = &node;
    symbol.is_defined = node.kind == NodeKind::kFunctionDef;
    Symbol* created = &out_.symbols.Create(std::move(symbol));
    scope.names[node.text] = created;
    node.resolved_symbol = created;
    return created;
  }

  Symbol* Builtin(const std::string& name, SymbolKind kind, const TypeDesc& type,
                  const SourceLocation& loc) {
    auto it = builtins_.find(name);
    if (it != builtins_.end()) return it->second;
    Symbol symbol;
    symbol.name = name;
    symbol.kind = kind;
    symbol.declared_type = type;
    symbol.scope_id = kBuiltinScope;
    symbol.decl_loc = loc;
    Symbol* created = &out_.symbols.Create(std::move(symbol));
    builtins_[name] = created;
    return created;
  }

  bool HeaderIncluded(std::string_view header) const {
    return tu_.included_standard_headers.count(std::string(header)) != 0;
  }

  void ResolveTopLevel(AstNode& node) {
    switch (node.kind) {
      case NodeKind::kFunctionDef:
        ResolveFunctionDef(node);
        break;
      default:
        ResolveStatement(node);
        break;
    }
  }

  void ResolveFunctionDef(AstNode& fn) {
    Declare(fn, SymbolKind::kFunction, TypeDesc::Function(fn.type));
    PushScope();
    const size_t n_params = fn.size() - 1;
    for (size_t i = 0; i < n_params; ++i) {
      AstNode& param = *fn.child(i);
      Symbol* symbol = Declare(param, SymbolKind::kParameter, param.type);
      if (fn.text == "main" && i == 1) symbol->is_argv = true;
    }
    // Parameters and the outermost block share one scope.
    for (auto& item : fn.child(n_params)->children) ResolveStatement(*item);
    PopScope();
  }

  void ResolveStatement(AstNode& node) {
    switch (node.kind) {
      case NodeKind::kCompoundStmt:
        PushScope();
        for (auto& item : node.children) ResolveStatement(*item);
        PopScope();
        return;
      case NodeKind::kFor:
        PushScope();
        for (auto& item : node.children) ResolveStatement(*item);
        PopScope();
        return;
      case NodeKind::kDeclaration:
        Declare(node, SymbolKind::kVariable, node.type);
        for (auto& init : node.children) ResolveExpression(*init);
        return;
      case NodeKind::kFunctionDecl:
        Declare(node, SymbolKind::kFunction, TypeDesc::Function(node.type));
        return;
      case NodeKind::kStructDef: {
        std::vector<StructMember> members;
        for (const auto& m : node.children) members.push_back({m->text, m->type});
        if (out_.symbols.HasStruct(node.text)) {
          throw FrontendError(FrontendError::Kind::kRedeclaration, node.loc,
                              "struct '" + node.text + "' redefined");
        }
        out_.symbols.DefineStruct(node.text, std::move(members));
        Symbol tag;
        tag.name = node.text;
        tag.kind = SymbolKind::kStructTag;
        tag.declared_type = node.type;
        tag.scope_id = scopes_.back().id;
        tag.decl_loc = node.loc;
        tag.decl = &node;
        node.resolved_symbol = &out_.symbols.Create(std::move(tag));
        return;
      }
      case NodeKind::kFunctionDef:
        // Rejected by the parser below file scope.
        return;
      default:
        break;
    }
    if (node.IsExpression()) {
      ResolveExpression(node);
      return;
    }
    for (auto& child : node.children) ResolveStatement(*child);
  }

  void ResolveIdentifier(AstNode& ref) {
    if (Symbol* symbol = Lookup(ref.text)) {
      ref.resolved_symbol = symbol;
      return;
    }
    if (ref.text == "errno" && HeaderIncluded("errno.h")) {
      Symbol* errno_symbol = Builtin("errno", SymbolKind::kVariable,
                                     TypeDesc::SignedInt(), {"errno.h", 1, 1});
      errno_symbol->is_errno = true;
      ref.resolved_symbol = errno_symbol;
      return;
    }
    if ((ref.text == "stdin" || ref.text == "stdout" || ref.text == "stderr") &&
        HeaderIncluded("stdio.h")) {
      ref.resolved_symbol =
          Builtin(ref.text, SymbolKind::kVariable,
                  TypeDesc::PointerTo(TypeDesc::Struct("FILE")), {"stdio.h", 1, 1});
      return;
    }
    if (const LibraryFunctionInfo* lib = FindLibraryFunction(ref.text);
        lib && HeaderIncluded(lib->header)) {
      ref.resolved_symbol = LibrarySymbol(*lib);
      return;
    }
    out_.notes.push_back({SemaNote::Kind::kUnresolvedName, ref.loc, ref.text});
  }

  Symbol* LibrarySymbol(const LibraryFunctionInfo& lib) {
    return Builtin(std::string(lib.name), SymbolKind::kFunction,
                   TypeDesc::Function(lib.return_type),
                   {std::string(lib.header), 1, 1});
  }

  void ResolveCall(AstNode& call) {
    AstNode& callee = *call.child(0);
    if (callee.kind == NodeKind::kIdentifierRef) {
      const std::string& name = callee.text;
      Symbol* user = Lookup(name);
      const LibraryFunctionInfo* lib = FindLibraryFunction(name);
      const bool defined_here = defined_functions_.count(name) != 0;
      if (lib && !defined_here && HeaderIncluded(lib->header) &&
          (user == nullptr || user->kind == SymbolKind::kFunction)) {
        call.library = lib;
        callee.resolved_symbol = user ? user : LibrarySymbol(*lib);
      } else if (user) {
        callee.resolved_symbol = user;
      } else {
        out_.notes.push_back({SemaNote::Kind::kImplicitDeclaration, callee.loc, name});
        Symbol* implicit = Builtin(name, SymbolKind::kFunction,
                                   TypeDesc::Function(TypeDesc::SignedInt(std::nullopt)),
                                   callee.loc);
        implicit->is_implicit = true;
        callee.resolved_symbol = implicit;
      }
    } else {
      ResolveExpression(callee);
    }
    for (size_t i = 1; i < call.size(); ++i) ResolveExpression(*call.child(i));
  }

  void ResolveExpression(AstNode& expr) {
    switch (expr.kind) {
      case NodeKind::kIdentifierRef:
        ResolveIdentifier(expr);
        return;
      case NodeKind::kCall:
        ResolveCall(expr);
        return;
      case NodeKind::kTypeName:
        return;
      default:
        for (auto& child : expr.children) ResolveExpression(*child);
        return;
    }
  }

  TranslationUnit& tu_;
  Resolution& out_;
  std::vector<Scope> scopes_;
  int next_scope_id_ = 1;
  std::map<std::string, Symbol*> builtins_;
  std::set<std::string> defined_functions_;
};

}  // namespace

Resolution Resolve(TranslationUnit& tu) {
  Resolution result;
  Resolver(tu, result).Run();
  return result;
}

}  // namespace seclint
