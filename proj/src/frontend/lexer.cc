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

#include "seclint/frontend/lexer.h"

#include <algorithm>
#include <iterator>
#include <cctype>

#include "seclint/frontend/errors.h"

namespace seclint {
namespace {

constexpr std::string_view kKeywords[] = {
    "auto",     "break",    "case",     "char",       "const",
    "continue", "default",  "do",       "double",     "else",
    "enum",     "extern",   "float",    "for",        "goto",
    "if",       "inline",   "int",      "long",       "register",
    "restrict", "return",   "short",    "signed",     "sizeof",
    "static",   "struct",   "switch",   "typedef",    "union",
    "unsigned", "void",     "volatile", "while",      "_Bool",
    "_Complex", "_Imaginary", "_Alignas", "_Alignof", "_Atomic",
    "_Generic", "_Noreturn", "_Static_assert", "_Thread_local",
};

// Longest first so a greedy scan picks maximal munch.
constexpr std::string_view kPunctuators[] = {
    "...", "<<=", ">>=", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=",
    "&&",  "||",  "*=",  "/=", "%=", "+=", "-=", "&=", "^=", "|=", "[",  "]",
    "(",   ")",   "{",   "}",  ".",  "&",  "*",  "+",  "-",  "~",  "!",  "/",
    "%",   "<",   ">",   "^",  "|",  "?",  ":",  ";",  "=",  ",",
};

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  Lexer(const PreprocessedSource& source, std::string_view text,
        bool expand_user_macros)
      : source_(source), text_(text), expand_user_macros_(expand_user_macros) {}

  // When `fixed_loc` is set every token gets that location (macro bodies are
  // attributed to the expansion site).
  void Run(TokenList& out, const SourceLocation* fixed_loc) {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        Advance(1);
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        Advance(1);
        continue;
      }
      const SourceLocation loc = fixed_loc ? *fixed_loc : Here();
      if (IsIdentStart(c)) {
        LexWord(out, loc);
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && pos_ + 1 < text_.size() &&
                  std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        LexNumber(out, loc);
      } else if (c == '"' || c == '\'') {
        LexQuoted(out, loc, c);
      } else {
        LexPunctuator(out, loc);
      }
    }
  }

 private:
  SourceLocation Here() const { return {source_.path, line_, column_}; }

  void Advance(size_t n) {
    for (size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void LexWord(TokenList& out, const SourceLocation& loc) {
    size_t end = pos_;
    while (end < text_.size() && IsIdentChar(text_[end])) ++end;
    std::string word(text_.substr(pos_, end - pos_));
    Advance(end - pos_);

    if (expand_user_macros_) {
      auto it = source_.object_macros.find(word);
      if (it != source_.object_macros.end()) {
        Lexer body(source_, it->second.replacement, false);
        body.Run(out, &loc);
        return;
      }
    }
    const auto& headers = source_.included_standard_headers;
    if (word == "EOF" && headers.count("stdio.h")) {
      out.push_back({TokenKind::kIntegerLiteral, "-1", loc, StandardMacro::kEOF});
      return;
    }
    if (word == "NULL" && !headers.empty()) {
      out.push_back({TokenKind::kIntegerLiteral, "0", loc, StandardMacro::kNULL});
      return;
    }
    const TokenKind kind =
        IsKeyword(word) ? TokenKind::kKeyword : TokenKind::kIdentifier;
    out.push_back({kind, std::move(word), loc, std::nullopt});
  }

  void LexNumber(TokenList& out, const SourceLocation& loc) {
    size_t end = pos_;
    bool is_float = false;
    const bool hex = text_.substr(pos_, 2) == "0x" || text_.substr(pos_, 2) == "0X";
    while (end < text_.size()) {
      const char c = text_[end];
      if (IsIdentChar(c)) {
        const bool exponent = hex ? (c == 'p' || c == 'P') : (c == 'e' || c == 'E');
        if (exponent) {
          is_float = true;
          if (end + 1 < text_.size() &&
              (text_[end + 1] == '+' || text_[end + 1] == '-')) {
            ++end;
          }
        }
        ++end;
      } else if (c == '.') {
        is_float = true;
        ++end;
      } else {
        break;
      }
    }
    std::string number(text_.substr(pos_, end - pos_));
    Advance(end - pos_);
    out.push_back({is_float ? TokenKind::kFloatLiteral : TokenKind::kIntegerLiteral,
                   std::move(number), loc, std::nullopt});
  }

  void LexQuoted(TokenList& out, const SourceLocation& loc, char quote) {
    size_t end = pos_ + 1;
    while (true) {
      if (end >= text_.size() || text_[end] == '\n') {
        throw FrontendError(FrontendError::Kind::kLexError, loc,
                            quote == '"' ? "unterminated string literal"
                                         : "unterminated character literal");
      }
      if (text_[end] == '\\') {
        end += 2;
        continue;
      }
      if (text_[end] == quote) break;
      ++end;
    }
    ++end;
    std::string literal(text_.substr(pos_, end - pos_));
    if (quote == '\'' && literal.size() == 2) {
      throw FrontendError(FrontendError::Kind::kLexError, loc,
                          "empty character literal");
    }
    Advance(end - pos_);
    out.push_back({quote == '"' ? TokenKind::kStringLiteral : TokenKind::kCharLiteral,
                   std::move(literal), loc, std::nullopt});
  }

  void LexPunctuator(TokenList& out, const SourceLocation& loc) {
    const std::string_view rest = text_.substr(pos_);
    for (std::string_view p : kPunctuators) {
      if (rest.substr(0, p.size()) == p) {
        out.push_back({TokenKind::kPunctuator, std::string(p), loc, std::nullopt});
        Advance(p.size());
        return;
      }
    }
    const unsigned char byte = static_cast<unsigned char>(text_[pos_]);
    std::string shown = std::isprint(byte) ? std::string(1, text_[pos_])
                                           : "\\x" + ToHex(byte);
    throw FrontendError(FrontendError::Kind::kLexError, loc,
                        "illegal character '" + shown + "'");
  }

  static std::string ToHex(unsigned char byte) {
    constexpr char kDigits[] = "0123456789abcdef";
    return {kDigits[byte >> 4], kDigits[byte & 0xf]};
  }

  const PreprocessedSource& source_;
  std::string_view text_;
  bool expand_user_macros_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

const char* TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kIntegerLiteral: return "integer literal";
    case TokenKind::kFloatLiteral: return "floating literal";
    case TokenKind::kCharLiteral: return "character literal";
    case TokenKind::kStringLiteral: return "string literal";
    case TokenKind::kPunctuator: return "punctuator";
    case TokenKind::kEofMarker: return "end of file";
  }
  return "?";
}

bool IsKeyword(std::string_view word) {
  return std::find(std::begin(kKeywords), std::end(kKeywords), word) !=
         std::end(kKeywords);
}

TokenList Tokenize(const PreprocessedSource& source) {
  TokenList tokens;
  Lexer lexer(source, source.text, true);
  lexer.Run(tokens, nullptr);

  int last_line = 1 + static_cast<int>(
                          std::count(source.text.begin(), source.text.end(), '\n'));
  tokens.push_back({TokenKind::kEofMarker, "", {source.path, last_line, 1},
                    std::nullopt});
  return tokens;
}

}  // namespace seclint
