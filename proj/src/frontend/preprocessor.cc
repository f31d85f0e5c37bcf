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

#include "seclint/frontend/preprocessor.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <vector>

#include "seclint/frontend/errors.h"

namespace seclint {
namespace {

constexpr std::array<std::string_view, 13> kRecognizedHeaders = {
    "assert.h", "ctype.h",  "errno.h",  "limits.h", "locale.h",
    "math.h",   "signal.h", "stdarg.h", "stddef.h", "stdio.h",
    "stdlib.h", "string.h", "time.h",
};

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Replaces every comment byte except newlines with a space.
std::string StripComments(std::string_view in, const std::string& path) {
  std::string out(in);
  enum class State { kCode, kString, kChar, kLineComment, kBlockComment };
  State state = State::kCode;
  int line = 1;
  int column = 1;
  SourceLocation comment_start;
  for (size_t i = 0; i < in.size(); ++i) {
    const char c = in[i];
    const char next = i + 1 < in.size() ? in[i + 1] : '\0';
    switch (state) {
      case State::kCode:
        if (c == '/' && next == '/') {
          state = State::kLineComment;
          out[i] = ' ';
        } else if (c == '/' && next == '*') {
          state = State::kBlockComment;
          comment_start = {path, line, column};
          out[i] = ' ';
          out[i + 1] = ' ';
          ++i;
          ++column;
        } else if (c == '"') {
          state = State::kString;
        } else if (c == '\'') {
          state = State::kChar;
        }
        break;
      case State::kString:
      case State::kChar:
        if (c == '\\' && next != '\n' && next != '\0') {
          ++i;
          ++column;
        } else if ((state == State::kString && c == '"') ||
                   (state == State::kChar && c == '\'') || c == '\n') {
          // An unterminated literal is the lexer's to report.
          state = State::kCode;
        }
        break;
      case State::kLineComment:
        if (c == '\n') {
          state = State::kCode;
        } else {
          out[i] = ' ';
        }
        break;
      case State::kBlockComment:
        if (c == '*' && next == '/') {
          out[i] = ' ';
          out[i + 1] = ' ';
          ++i;
          ++column;
          state = State::kCode;
        } else if (c != '\n') {
          out[i] = ' ';
        }
        break;
    }
    if (in[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  if (state == State::kBlockComment) {
    throw FrontendError(FrontendError::Kind::kLexError, comment_start,
                        "unterminated comment");
  }
  return out;
}

std::vector<std::string> SplitLines(const std::string& text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (true) {
    size_t nl = text.find('\n', start);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace

bool IsRecognizedStandardHeader(std::string_view name) {
  return std::find(kRecognizedHeaders.begin(), kRecognizedHeaders.end(),
                   name) != kRecognizedHeaders.end();
}

PreprocessedSource Preprocess(std::string_view source_text,
                              const std::string& path) {
  PreprocessedSource result;
  result.path = path;
  std::vector<std::string> lines = SplitLines(StripComments(source_text, path));

  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    const size_t hash = line.find_first_not_of(" \t\r\f\v");
    if (hash == std::string::npos || line[hash] != '#') continue;
    const SourceLocation loc{path, static_cast<int>(i) + 1,
                             static_cast<int>(hash) + 1};

    // Gather backslash continuations, blanking each physical line.
    std::string directive = line.substr(hash + 1);
    size_t last = i;
    while (!directive.empty() && directive.back() == '\\' &&
           last + 1 < lines.size()) {
      directive.pop_back();
      directive += lines[++last];
    }
    for (size_t k = i; k <= last; ++k) lines[k].clear();
    i = last;

    std::string_view rest = Trim(directive);
    size_t name_end = 0;
    while (name_end < rest.size() && IsIdentChar(rest[name_end])) ++name_end;
    const std::string name(rest.substr(0, name_end));
    rest.remove_prefix(name_end);

    if (name.empty() || name == "pragma") continue;
    if (name == "include") {
      std::string_view target = Trim(rest);
      if (target.size() < 2 ||
          !((target.front() == '<' && target.back() == '>') ||
            (target.front() == '"' && target.back() == '"'))) {
        throw FrontendError(FrontendError::Kind::kUnsupportedDirective, loc,
                            "malformed #include");
      }
      std::string header(target.substr(1, target.size() - 2));
      if (IsRecognizedStandardHeader(header)) {
        result.included_standard_headers.insert(std::move(header));
      }
      continue;
    }
    if (name == "define") {
      std::string_view body = Trim(rest);
      size_t id_end = 0;
      while (id_end < body.size() && IsIdentChar(body[id_end])) ++id_end;
      if (id_end == 0) {
        throw FrontendError(FrontendError::Kind::kUnsupportedDirective, loc,
                            "malformed #define");
      }
      std::string macro(body.substr(0, id_end));
      if (id_end < body.size() && body[id_end] == '(') {
        throw FrontendError(FrontendError::Kind::kUnsupportedDirective, loc,
                            "function-like macro '" + macro + "'");
      }
      result.object_macros[macro] =
          ObjectMacro{std::string(Trim(body.substr(id_end))), loc};
      continue;
    }
    if (name == "undef") {
      result.object_macros.erase(std::string(Trim(rest)));
      continue;
    }
    if (name == "if" || name == "ifdef" || name == "ifndef" ||
        name == "elif" || name == "else" || name == "endif") {
      throw FrontendError(FrontendError::Kind::kUnsupportedDirective, loc,
                          "conditional compilation (#" + name + ")");
    }
    throw FrontendError(FrontendError::Kind::kUnsupportedDirective, loc,
                        "#" + name);
  }

  for (size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) result.text += '\n';
    result.text += lines[i];
  }
  return result;
}

}  // namespace seclint
