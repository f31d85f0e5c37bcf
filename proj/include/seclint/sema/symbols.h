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

#ifndef SECLINT_SEMA_SYMBOLS_H_
#define SECLINT_SEMA_SYMBOLS_H_

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seclint/frontend/ast.h"
#include "seclint/source_location.h"
#include "seclint/type.h"

namespace seclint {

enum class SymbolKind { kVariable, kParameter, kFunction, kStructTag };

const char* SymbolKindName(SymbolKind kind);

// Scope ids: 0 is file scope; kBuiltinScope holds standard library entities
// and implicitly declared functions.
inline constexpr int kBuiltinScope = -1;

struct Symbol {
  int id = 0;
  std::string name;
  SymbolKind kind = SymbolKind::kVariable;
  TypeDesc declared_type;
  bool is_array_declared_parameter = false;
  int scope_id = 0;
  SourceLocation decl_loc;
  const AstNode* decl = nullptr;

  bool is_defined = false;       // functions: has a body in this TU
  bool is_implicit = false;      // called without any declaration
  bool is_errno = false;         // the errno object (errno.h included)
  bool is_argv = false;          // second parameter of main
};

struct StructMember {
  std::string name;
  TypeDesc type;
};

class SymbolTable {
 public:
  Symbol& Create(Symbol symbol) {
    symbol.id = static_cast<int>(symbols_.size());
    symbols_.push_back(std::move(symbol));
    return symbols_.back();
  }

  const Symbol& at(int id) const { return symbols_.at(static_cast<size_t>(id)); }
  size_t size() const { return symbols_.size(); }
  const std::deque<Symbol>& all() const { return symbols_; }

  void DefineStruct(const std::string& tag, std::vector<StructMember> members) {
    structs_[tag] = std::move(members);
  }
  bool HasStruct(const std::string& tag) const { return structs_.count(tag) != 0; }
  std::optional<TypeDesc> MemberType(const std::string& tag,
                                     const std::string& member) const;

 private:
  std::deque<Symbol> symbols_;
  std::map<std::string, std::vector<StructMember>> structs_;
};

}  // namespace seclint

#endif  // SECLINT_SEMA_SYMBOLS_H_
