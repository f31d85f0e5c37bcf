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

#include "seclint/frontend/parser.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>
#include <vector>

#include "seclint/frontend/errors.h"
#include "seclint/frontend/lexer.h"
#include "seclint/frontend/preprocessor.h"

namespace seclint {
namespace {

using NodePtr = std::unique_ptr<AstNode>;

struct DeclSpec {
  TypeDesc base;
  SourceLocation loc;
  bool is_extern = false;
  NodePtr struct_def;
};

struct Declarator {
  std::string name;
  SourceLocation loc;
  TypeDesc type;
  bool array_declarator = false;
  std::optional<std::uint64_t> array_extent;
  bool is_function = false;
  bool is_variadic = false;
  std::vector<NodePtr> params;
};

class Parser {
 public:
  explicit Parser(const TokenList& tokens) : tokens_(tokens) {}

  TranslationUnit Run() {
    TranslationUnit tu;
    tu.path = tokens_.empty() ? std::string() : tokens_.front().loc.file;
    while (Peek().kind != TokenKind::kEofMarker) {
      ParseExternalDeclaration(tu.top_level);
    }
    tu.node_count = next_id_;
    return tu;
  }

 private:
  // ---- token helpers -----------------------------------------------------

  const Token& Peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  const Token& Next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool AcceptPunct(std::string_view p) {
    if (Peek().IsPunct(p)) {
      Next();
      return true;
    }
    return false;
  }
  const Token& ExpectPunct(std::string_view p) {
    if (!Peek().IsPunct(p)) Fail(Peek(), "expected '" + std::string(p) + "'");
    return Next();
  }
  [[noreturn]] void Fail(const Token& at, const std::string& what) const {
    std::string found = at.kind == TokenKind::kEofMarker
                            ? "end of file"
                            : "'" + at.text + "'";
    throw FrontendError(FrontendError::Kind::kParseError, at.loc,
                        what + ", found " + found);
  }
  [[noreturn]] void Unsupported(const Token& at, const std::string& what) const {
    throw FrontendError(FrontendError::Kind::kParseError, at.loc,
                        "unsupported construct: " + what);
  }

  NodePtr Make(NodeKind kind, SourceLocation loc) {
    auto node = std::make_unique<AstNode>(kind, std::move(loc));
    node->id = next_id_++;
    return node;
  }

  // ---- declarations --------------------------------------------------------

  bool IsBuiltinTypedefName(const Token& t) const {
    return t.kind == TokenKind::kIdentifier &&
           (t.text == "size_t" || t.text == "FILE");
  }

  bool StartsDeclaration(const Token& t) const {
    if (t.kind == TokenKind::kKeyword) {
      static constexpr std::string_view kStarters[] = {
          "void",   "char",     "short",  "int",      "long",  "float",
          "double", "signed",   "unsigned", "struct", "const", "volatile",
          "static", "extern",   "auto",   "register", "typedef", "union",
          "enum",   "restrict", "inline", "_Bool",    "_Complex", "_Atomic",
          "_Noreturn", "_Thread_local", "_Alignas", "_Static_assert"};
      for (std::string_view s : kStarters) {
        if (t.text == s) return true;
      }
      return false;
    }
    return IsBuiltinTypedefName(t);
  }

  DeclSpec ParseDeclSpecifiers() {
    DeclSpec spec;
    spec.loc = Peek().loc;
    int n_void = 0, n_char = 0, n_short = 0, n_int = 0, n_long = 0;
    int n_float = 0, n_double = 0, n_signed = 0, n_unsigned = 0;
    bool is_const = false;
    std::optional<TypeDesc> named;
    bool any = false;
    while (true) {
      const Token& t = Peek();
      if (t.kind == TokenKind::kKeyword) {
        const std::string& k = t.text;
        if (k == "typedef") Unsupported(t, "typedef");
        if (k == "union") Unsupported(t, "union");
        if (k == "enum") Unsupported(t, "enum");
        if (k == "inline" || k == "_Bool" || k == "_Complex" ||
            k == "_Atomic" || k == "_Noreturn" || k == "_Thread_local" ||
            k == "_Alignas" || k == "_Static_assert") {
          Unsupported(t, k);
        }
        if (k == "static" || k == "auto" || k == "register") {
          Next();
        } else if (k == "extern") {
          spec.is_extern = true;
          Next();
        } else if (k == "const") {
          is_const = true;
          Next();
        } else if (k == "volatile" || k == "restrict") {
          Next();
        } else if (k == "void") { ++n_void; Next();
        } else if (k == "char") { ++n_char; Next();
        } else if (k == "short") { ++n_short; Next();
        } else if (k == "int") { ++n_int; Next();
        } else if (k == "long") { ++n_long; Next();
        } else if (k == "float") { ++n_float; Next();
        } else if (k == "double") { ++n_double; Next();
        } else if (k == "signed") { ++n_signed; Next();
        } else if (k == "unsigned") { ++n_unsigned; Next();
        } else if (k == "struct") {
          if (named) Fail(t, "conflicting type specifiers");
          named = ParseStructSpecifier(spec);
        } else {
          break;
        }
        any = true;
        continue;
      }
      if (IsBuiltinTypedefName(t) && !named && !any) {
        named = t.text == "size_t" ? TypeDesc::Size()
                                   : TypeDesc::Struct("FILE");
        Next();
        any = true;
        continue;
      }
      break;
    }
    if (!any) Fail(Peek(), "expected declaration specifiers");

    const int n_basic = n_void + n_char + n_short + n_int + n_long + n_float +
                        n_double + n_signed + n_unsigned;
    if (named) {
      if (n_basic) Fail(Peek(), "conflicting type specifiers");
      spec.base = *named;
    } else if (n_void) {
      spec.base = TypeDesc::Void();
    } else if (n_char) {
      spec.base = n_unsigned ? TypeDesc::UnsignedChar()
                  : n_signed ? TypeDesc::SignedChar()
                             : TypeDesc::PlainChar();
    } else if (n_float) {
      spec.base = TypeDesc::Floating(4);
    } else if (n_double) {
      spec.base = TypeDesc::Floating(n_long ? 16 : 8);
    } else if (n_basic) {
      const std::uint64_t size = n_short ? 2 : n_long ? 8 : 4;
      spec.base = n_unsigned ? TypeDesc::UnsignedInt(size)
                             : TypeDesc::SignedInt(size);
    } else {
      // Only qualifiers/storage class: implicit int is not in the subset.
      Fail(Peek(), "expected type specifier");
    }
    spec.base = spec.base.WithConst(is_const);
    return spec;
  }

  TypeDesc ParseStructSpecifier(DeclSpec& spec) {
    const Token& kw = Next();  // struct
    std::string tag;
    if (Peek().kind == TokenKind::kIdentifier) {
      tag = Next().text;
    }
    if (Peek().IsPunct("{")) {
      if (tag.empty()) {
        tag = "<anonymous@" + std::to_string(kw.loc.line) + ":" +
              std::to_string(kw.loc.column) + ">";
      }
      auto def = Make(NodeKind::kStructDef, kw.loc);
      def->text = tag;
      def->type = TypeDesc::Struct(tag);
      Next();
      while (!Peek().IsPunct("}")) {
        if (Peek().kind == TokenKind::kEofMarker) Fail(Peek(), "expected '}'");
        DeclSpec member_spec = ParseDeclSpecifiers();
        if (member_spec.struct_def) {
          Unsupported(Peek(), "nested struct definitions");
        }
        do {
          Declarator d = ParseDeclarator(member_spec.base, false);
          if (Peek().IsPunct(":")) Unsupported(Peek(), "bit-fields");
          if (d.is_function) Fail(Peek(), "function declared as struct member");
          auto member = Make(NodeKind::kDeclaration, d.loc);
          member->text = d.name;
          member->type = d.type;
          def->Add(std::move(member));
        } while (AcceptPunct(","));
        ExpectPunct(";");
      }
      Next();
      spec.struct_def = std::move(def);
    } else if (tag.empty()) {
      Fail(Peek(), "expected struct tag or '{'");
    }
    return TypeDesc::Struct(tag);
  }

  std::optional<std::uint64_t> ParseArrayExtent() {
    if (Peek().IsPunct("]")) return std::nullopt;
    const Token& at = Peek();
    NodePtr expr = ParseConditional();
    std::optional<std::int64_t> value = FoldConstant(*expr);
    if (!value || *value < 0) Fail(at, "expected non-negative constant array extent");
    return static_cast<std::uint64_t>(*value);
  }

  std::optional<std::int64_t> FoldConstant(const AstNode& e) const {
    switch (e.kind) {
      case NodeKind::kLiteral:
        if (e.literal_kind == LiteralKind::kInteger) {
          return ParseIntegerLiteral(e.text);
        }
        return std::nullopt;
      case NodeKind::kUnaryOp: {
        auto v = FoldConstant(*e.child(0));
        if (!v) return std::nullopt;
        if (e.op == "-") return -*v;
        if (e.op == "+") return *v;
        return std::nullopt;
      }
      case NodeKind::kBinaryOp: {
        auto a = FoldConstant(*e.child(0));
        auto b = FoldConstant(*e.child(1));
        if (!a || !b) return std::nullopt;
        if (e.op == "+") return *a + *b;
        if (e.op == "-") return *a - *b;
        if (e.op == "*") return *a * *b;
        return std::nullopt;
      }
      default:
        return std::nullopt;
    }
  }

  // Parses pointers, the (optional when `abstract_ok`) name and suffixes.
  Declarator ParseDeclarator(TypeDesc type, bool abstract_ok) {
    Declarator d;
    d.loc = Peek().loc;
    while (Peek().IsPunct("*")) {
      Next();
      type = TypeDesc::PointerTo(std::move(type));
      while (Peek().IsKeyword("const") || Peek().IsKeyword("volatile") ||
             Peek().IsKeyword("restrict")) {
        if (Next().text == "const") type = type.WithConst(true);
      }
    }
    if (Peek().IsPunct("(")) {
      const Token& p = Peek(1);
      if (p.IsPunct("*") || p.IsPunct("^")) Unsupported(Peek(), "function pointers");
      if (!abstract_ok) Fail(Peek(), "expected identifier");
    }
    if (Peek().kind == TokenKind::kIdentifier) {
      d.loc = Peek().loc;
      d.name = Next().text;
    } else if (!abstract_ok) {
      Fail(Peek(), "expected identifier");
    }
    if (Peek().IsPunct("[")) {
      Next();
      d.array_declarator = true;
      d.array_extent = ParseArrayExtent();
      ExpectPunct("]");
      if (Peek().IsPunct("[")) Unsupported(Peek(), "multi-dimensional arrays");
      type = TypeDesc::ArrayOf(std::move(type), d.array_extent);
    } else if (Peek().IsPunct("(") && !d.name.empty()) {
      Next();
      d.is_function = true;
      ParseParameterList(d);
      type = TypeDesc::Function(std::move(type));
      if (Peek().IsPunct("(") || Peek().IsPunct("[")) {
        Unsupported(Peek(), "function returning function or array");
      }
    }
    d.type = std::move(type);
    return d;
  }

  void ParseParameterList(Declarator& fn) {
    if (AcceptPunct(")")) return;
    if (Peek().IsKeyword("void") && Peek(1).IsPunct(")")) {
      Next();
      Next();
      return;
    }
    while (true) {
      if (Peek().IsPunct("...")) {
        Next();
        fn.is_variadic = true;
        break;
      }
      if (!StartsDeclaration(Peek())) Fail(Peek(), "expected parameter declaration");
      DeclSpec spec = ParseDeclSpecifiers();
      if (spec.struct_def) Unsupported(Peek(), "struct definition in parameter list");
      Declarator d = ParseDeclarator(spec.base, true);
      if (d.is_function) Unsupported(Peek(), "function pointers");
      auto param = Make(NodeKind::kParameter, d.loc);
      param->text = d.name;
      param->array_declarator = d.array_declarator;
      param->array_extent = d.array_extent;
      param->type = d.array_declarator ? d.type.Decay() : d.type;
      fn.params.push_back(std::move(param));
      if (!AcceptPunct(",")) break;
    }
    ExpectPunct(")");
  }

  NodePtr ParseInitializer() {
    if (Peek().IsPunct("{")) {
      auto list = Make(NodeKind::kInitList, Next().loc);
      while (!Peek().IsPunct("}")) {
        if (Peek().IsPunct(".") || Peek().IsPunct("[")) {
          Unsupported(Peek(), "designated initializers");
        }
        list->Add(ParseInitializer());
        if (!AcceptPunct(",")) break;
      }
      ExpectPunct("}");
      return list;
    }
    return ParseAssignment();
  }

  NodePtr MakeDeclaration(const DeclSpec& spec, Declarator d) {
    if (d.is_function) {
      auto decl = Make(NodeKind::kFunctionDecl, d.loc);
      decl->text = d.name;
      decl->type = d.type.element();
      decl->is_variadic = d.is_variadic;
      decl->is_extern = true;
      for (auto& p : d.params) decl->Add(std::move(p));
      return decl;
    }
    auto decl = Make(NodeKind::kDeclaration, d.loc);
    decl->text = d.name;
    decl->is_extern = spec.is_extern;
    if (AcceptPunct("=")) {
      NodePtr init = ParseInitializer();
      // `char s[] = "abc"` and `int a[] = {1, 2}` size the array.
      if (d.type.IsArray() && !d.type.extent()) {
        std::optional<std::uint64_t> extent;
        if (init->kind == NodeKind::kLiteral &&
            init->literal_kind == LiteralKind::kString) {
          extent = StringLiteralLength(init->text) + 1;
        } else if (init->kind == NodeKind::kInitList) {
          extent = init->size();
        }
        d.type = TypeDesc::ArrayOf(d.type.element(), extent);
      }
      decl->Add(std::move(init));
    }
    decl->type = d.type;
    return decl;
  }

  // Parses one declaration (all declarators) into `out`.
  void ParseDeclaration(std::vector<NodePtr>& out, bool file_scope) {
    DeclSpec spec = ParseDeclSpecifiers();
    if (spec.struct_def) out.push_back(std::move(spec.struct_def));
    if (AcceptPunct(";")) return;
    bool first = true;
    do {
      Declarator d = ParseDeclarator(spec.base, false);
      if (first && d.is_function && Peek().IsPunct("{")) {
        if (!file_scope) Fail(Peek(), "nested function definition");
        if (d.is_variadic) Unsupported(Peek(), "variadic function definitions");
        auto fn = Make(NodeKind::kFunctionDef, d.loc);
        fn->text = d.name;
        fn->type = d.type.element();
        for (auto& p : d.params) {
          if (p->text.empty()) Fail(Peek(), "unnamed parameter in function definition");
          fn->Add(std::move(p));
        }
        fn->Add(ParseCompound());
        out.push_back(std::move(fn));
        return;
      }
      first = false;
      out.push_back(MakeDeclaration(spec, std::move(d)));
    } while (AcceptPunct(","));
    ExpectPunct(";");
  }

  void ParseExternalDeclaration(std::vector<NodePtr>& out) {
    const Token& t = Peek();
    if (AcceptPunct(";")) return;
    if (!StartsDeclaration(t)) Fail(t, "expected declaration");
    ParseDeclaration(out, true);
  }

  static std::uint64_t StringLiteralLength(const std::string& spelling) {
    std::uint64_t n = 0;
    // Concatenated literals are stored with their quotes: "ab""cd".
    bool in = false;
    for (size_t i = 0; i < spelling.size(); ++i) {
      const char c = spelling[i];
      if (c == '"') {
        in = !in;
        continue;
      }
      if (!in) continue;
      if (c == '\\' && i + 1 < spelling.size()) {
        const char e = spelling[++i];
        if (e == 'x') {
          while (i + 1 < spelling.size() && std::isxdigit(static_cast<unsigned char>(spelling[i + 1]))) ++i;
        } else if (e >= '0' && e <= '7') {
          for (int k = 0; k < 2 && i + 1 < spelling.size() && spelling[i + 1] >= '0' && spelling[i + 1] <= '7'; ++k) ++i;
        }
      }
      ++n;
    }
    return n;
  }

  // ---- statements ----------------------------------------------------------

  NodePtr ParseCompound() {
    auto block = Make(NodeKind::kCompoundStmt, ExpectPunct("{").loc);
    while (!Peek().IsPunct("}")) {
      if (Peek().kind == TokenKind::kEofMarker) Fail(Peek(), "expected '}'");
      ParseBlockItem(block->children);
    }
    Next();
    return block;
  }

  void ParseBlockItem(std::vector<NodePtr>& out) {
    if (StartsDeclaration(Peek())) {
      ParseDeclaration(out, false);
    } else {
      out.push_back(ParseStatement());
    }
  }

  NodePtr ParseStatement() {
    const Token& t = Peek();
    if (t.IsPunct("{")) return ParseCompound();
    if (t.IsPunct(";")) return Make(NodeKind::kEmptyStmt, Next().loc);
    if (t.kind == TokenKind::kKeyword) {
      const std::string& k = t.text;
      if (k == "goto" || k == "switch" || k == "case" || k == "default" ||
          k == "break" || k == "continue") {
        Unsupported(t, k);
      }
      if (k == "if") return ParseIf();
      if (k == "while") return ParseWhile();
      if (k == "do") return ParseDo();
      if (k == "for") return ParseFor();
      if (k == "return") {
        auto ret = Make(NodeKind::kReturn, Next().loc);
        if (!Peek().IsPunct(";")) ret->Add(ParseExpression());
        ExpectPunct(";");
        return ret;
      }
      if (StartsDeclaration(t)) Fail(t, "declaration not allowed here");
    }
    if (t.kind == TokenKind::kIdentifier && Peek(1).IsPunct(":")) {
      Unsupported(t, "labels");
    }
    auto stmt = Make(NodeKind::kExpressionStmt, t.loc);
    stmt->Add(ParseExpression());
    ExpectPunct(";");
    return stmt;
  }

  NodePtr ParseIf() {
    auto node = Make(NodeKind::kIf, Next().loc);
    ExpectPunct("(");
    node->Add(ParseExpression());
    ExpectPunct(")");
    node->Add(ParseStatement());
    if (Peek().IsKeyword("else")) {
      Next();
      node->Add(ParseStatement());
    }
    return node;
  }

  NodePtr ParseWhile() {
    auto node = Make(NodeKind::kWhile, Next().loc);
    ExpectPunct("(");
    node->Add(ParseExpression());
    ExpectPunct(")");
    node->Add(ParseStatement());
    return node;
  }

  NodePtr ParseDo() {
    auto node = Make(NodeKind::kDo, Next().loc);
    node->Add(ParseStatement());
    if (!Peek().IsKeyword("while")) Fail(Peek(), "expected 'while'");
    Next();
    ExpectPunct("(");
    node->Add(ParseExpression());
    ExpectPunct(")");
    ExpectPunct(";");
    return node;
  }

  NodePtr ParseFor() {
    auto node = Make(NodeKind::kFor, Next().loc);
    ExpectPunct("(");
    if (Peek().IsPunct(";")) {
      node->Add(Make(NodeKind::kEmptyStmt, Next().loc));
    } else if (StartsDeclaration(Peek())) {
      std::vector<NodePtr> decls;
      const Token& at = Peek();
      ParseDeclaration(decls, false);
      if (decls.size() != 1 || decls[0]->kind != NodeKind::kDeclaration) {
        Unsupported(at, "multiple declarators in for-init");
      }
      node->Add(std::move(decls[0]));
    } else {
      auto init = Make(NodeKind::kExpressionStmt, Peek().loc);
      init->Add(ParseExpression());
      ExpectPunct(";");
      node->Add(std::move(init));
    }
    if (Peek().IsPunct(";")) {
      node->Add(Make(NodeKind::kEmptyStmt, Peek().loc));
    } else {
      node->Add(ParseExpression());
    }
    ExpectPunct(";");
    if (Peek().IsPunct(")")) {
      node->Add(Make(NodeKind::kEmptyStmt, Peek().loc));
    } else {
      node->Add(ParseExpression());
    }
    ExpectPunct(")");
    node->Add(ParseStatement());
    return node;
  }

  // ---- expressions ---------------------------------------------------------

  NodePtr ParseExpression() {
    NodePtr lhs = ParseAssignment();
    while (Peek().IsPunct(",")) {
      auto node = Make(NodeKind::kBinaryOp, Next().loc);
      node->op = ",";
      node->Add(std::move(lhs));
      node->Add(ParseAssignment());
      lhs = std::move(node);
    }
    return lhs;
  }

  static bool IsAssignmentOp(const Token& t) {
    static constexpr std::string_view kOps[] = {
        "=", "+=", "-=", "*=", "/=", "%=", "<<=", ">>=", "&=", "^=", "|="};
    if (t.kind != TokenKind::kPunctuator) return false;
    for (std::string_view op : kOps) {
      if (t.text == op) return true;
    }
    return false;
  }

  NodePtr ParseAssignment() {
    NodePtr lhs = ParseConditional();
    if (IsAssignmentOp(Peek())) {
      const Token& op = Next();
      auto node = Make(NodeKind::kAssignment, op.loc);
      node->op = op.text;
      node->Add(std::move(lhs));
      node->Add(ParseAssignment());
      return node;
    }
    return lhs;
  }

  NodePtr ParseConditional() {
    NodePtr cond = ParseBinary(0);
    if (Peek().IsPunct("?")) {
      auto node = Make(NodeKind::kConditional, Next().loc);
      node->Add(std::move(cond));
      node->Add(ParseExpression());
      ExpectPunct(":");
      node->Add(ParseConditional());
      return node;
    }
    return cond;
  }

  static int Precedence(const Token& t) {
    if (t.kind != TokenKind::kPunctuator) return -1;
    const std::string& s = t.text;
    if (s == "||") return 0;
    if (s == "&&") return 1;
    if (s == "|") return 2;
    if (s == "^") return 3;
    if (s == "&") return 4;
    if (s == "==" || s == "!=") return 5;
    if (s == "<" || s == ">" || s == "<=" || s == ">=") return 6;
    if (s == "<<" || s == ">>") return 7;
    if (s == "+" || s == "-") return 8;
    if (s == "*" || s == "/" || s == "%") return 9;
    return -1;
  }

  NodePtr ParseBinary(int min_prec) {
    NodePtr lhs = ParseCast();
    while (true) {
      const int prec = Precedence(Peek());
      if (prec < min_prec || prec < 0) return lhs;
      const Token& op = Next();
      NodePtr rhs = ParseBinary(prec + 1);
      auto node = Make(NodeKind::kBinaryOp, op.loc);
      node->op = op.text;
      node->Add(std::move(lhs));
      node->Add(std::move(rhs));
      lhs = std::move(node);
    }
  }

  bool StartsTypeName(size_t ahead) const {
    const Token& t = Peek(ahead);
    if (t.kind == TokenKind::kKeyword) {
      return StartsDeclaration(t) && t.text != "static" && t.text != "extern" &&
             t.text != "auto" && t.text != "register";
    }
    return IsBuiltinTypedefName(t);
  }

  TypeDesc ParseTypeName() {
    DeclSpec spec = ParseDeclSpecifiers();
    if (spec.struct_def) Unsupported(Peek(), "struct definition in type name");
    Declarator d = ParseDeclarator(spec.base, true);
    if (!d.name.empty()) Fail(Peek(), "expected type name");
    return d.type;
  }

  NodePtr ParseCast() {
    if (Peek().IsPunct("(") && StartsTypeName(1)) {
      auto node = Make(NodeKind::kCast, Next().loc);
      node->type = ParseTypeName();
      ExpectPunct(")");
      if (Peek().IsPunct("{")) Unsupported(Peek(), "compound literals");
      node->Add(ParseCast());
      return node;
    }
    return ParseUnary();
  }

  NodePtr ParseUnary() {
    const Token& t = Peek();
    if (t.kind == TokenKind::kPunctuator &&
        (t.text == "++" || t.text == "--" || t.text == "&" || t.text == "*" ||
         t.text == "+" || t.text == "-" || t.text == "~" || t.text == "!")) {
      auto node = Make(NodeKind::kUnaryOp, Next().loc);
      node->op = t.text;
      if (node->op == "++" || node->op == "--") {
        node->Add(ParseUnary());
      } else {
        node->Add(ParseCast());
      }
      return node;
    }
    if (t.IsKeyword("sizeof")) {
      auto node = Make(NodeKind::kSizeofExpr, Next().loc);
      if (Peek().IsPunct("(") && StartsTypeName(1)) {
        auto type_name = Make(NodeKind::kTypeName, Next().loc);
        type_name->type = ParseTypeName();
        ExpectPunct(")");
        node->Add(std::move(type_name));
      } else {
        node->Add(ParseUnary());
      }
      return node;
    }
    if (t.IsKeyword("_Alignof") || t.IsKeyword("_Generic")) Unsupported(t, t.text);
    return ParsePostfix(ParsePrimary());
  }

  NodePtr ParsePostfix(NodePtr expr) {
    while (true) {
      const Token& t = Peek();
      if (t.IsPunct("[")) {
        Next();
        auto node = Make(NodeKind::kArraySubscript, expr->loc);
        node->Add(std::move(expr));
        node->Add(ParseExpression());
        ExpectPunct("]");
        expr = std::move(node);
      } else if (t.IsPunct("(")) {
        Next();
        auto node = Make(NodeKind::kCall, expr->loc);
        node->Add(std::move(expr));
        if (!Peek().IsPunct(")")) {
          do {
            node->Add(ParseAssignment());
          } while (AcceptPunct(","));
        }
        ExpectPunct(")");
        expr = std::move(node);
      } else if (t.IsPunct(".") || t.IsPunct("->")) {
        Next();
        if (Peek().kind != TokenKind::kIdentifier) Fail(Peek(), "expected member name");
        auto node = Make(NodeKind::kMemberAccess, expr->loc);
        node->op = t.text;
        node->text = Next().text;
        node->Add(std::move(expr));
        expr = std::move(node);
      } else if (t.IsPunct("++") || t.IsPunct("--")) {
        auto node = Make(NodeKind::kUnaryOp, Next().loc);
        node->op = t.text;
        node->postfix = true;
        node->Add(std::move(expr));
        expr = std::move(node);
      } else {
        return expr;
      }
    }
  }

  NodePtr ParsePrimary() {
    const Token& t = Peek();
    switch (t.kind) {
      case TokenKind::kIdentifier: {
        auto node = Make(NodeKind::kIdentifierRef, Next().loc);
        node->text = t.text;
        return node;
      }
      case TokenKind::kIntegerLiteral:
      case TokenKind::kFloatLiteral:
      case TokenKind::kCharLiteral: {
        auto node = Make(NodeKind::kLiteral, Next().loc);
        node->text = t.text;
        node->from_standard_macro = t.from_standard_macro;
        node->literal_kind = t.kind == TokenKind::kIntegerLiteral ? LiteralKind::kInteger
                             : t.kind == TokenKind::kFloatLiteral ? LiteralKind::kFloat
                                                                  : LiteralKind::kChar;
        if (node->literal_kind == LiteralKind::kInteger && !ParseIntegerLiteral(t.text)) {
          Fail(t, "malformed integer literal");
        }
        return node;
      }
      case TokenKind::kStringLiteral: {
        auto node = Make(NodeKind::kLiteral, Next().loc);
        node->literal_kind = LiteralKind::kString;
        node->text = t.text;
        while (Peek().kind == TokenKind::kStringLiteral) node->text += Next().text;
        return node;
      }
      case TokenKind::kPunctuator:
        if (t.IsPunct("(")) {
          Next();
          NodePtr inner = ParseExpression();
          ExpectPunct(")");
          return inner;
        }
        break;
      default:
        break;
    }
    Fail(t, "expected expression");
  }

  const TokenList& tokens_;
  size_t pos_ = 0;
  int next_id_ = 0;
};

}  // namespace

std::optional<std::int64_t> ParseIntegerLiteral(std::string_view spelling) {
  bool negative = false;
  if (!spelling.empty() && spelling.front() == '-') {
    negative = true;
    spelling.remove_prefix(1);
  }
  while (!spelling.empty() &&
         (spelling.back() == 'u' || spelling.back() == 'U' ||
          spelling.back() == 'l' || spelling.back() == 'L')) {
    spelling.remove_suffix(1);
  }
  if (spelling.empty()) return std::nullopt;
  int base = 10;
  if (spelling.size() > 2 && spelling[0] == '0' &&
      (spelling[1] == 'x' || spelling[1] == 'X')) {
    base = 16;
    spelling.remove_prefix(2);
  } else if (spelling.size() > 1 && spelling[0] == '0') {
    base = 8;
    spelling.remove_prefix(1);
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(spelling.data(),
                                   spelling.data() + spelling.size(), value, base);
  if (ec != std::errc() || ptr != spelling.data() + spelling.size()) {
    return std::nullopt;
  }
  const auto signed_value = static_cast<std::int64_t>(value);
  return negative ? -signed_value : signed_value;
}

TranslationUnit Parse(const TokenList& tokens) {
  if (tokens.empty() || tokens.back().kind != TokenKind::kEofMarker) {
    throw FrontendError(FrontendError::Kind::kParseError,
                        tokens.empty() ? SourceLocation{"<input>", 1, 1}
                                       : tokens.back().loc,
                        "token stream does not end with an end-of-file marker");
  }
  return Parser(tokens).Run();
}

TranslationUnit ParseSource(std::string_view source_text,
                            const std::string& path) {
  PreprocessedSource pre = Preprocess(source_text, path);
  TranslationUnit tu = Parse(Tokenize(pre));
  tu.path = path;
  tu.included_standard_headers = std::move(pre.included_standard_headers);
  return tu;
}

}  // namespace seclint
