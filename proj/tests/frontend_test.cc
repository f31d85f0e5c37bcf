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

#include <gtest/gtest.h>

#include <string>

#include "seclint/frontend/errors.h"
#include "seclint/frontend/lexer.h"
#include "seclint/frontend/parser.h"
#include "seclint/frontend/preprocessor.h"

namespace seclint {
namespace {

std::vector<Token> Lex(std::string_view text) { return Tokenize(Preprocess(text, "t.c")); }

FrontendError::Kind ErrorKind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const FrontendError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no FrontendError thrown";
  return FrontendError::Kind::kParseError;
}

TEST(PreprocessTest, CommentKeepsFollowingColumns) {
  const PreprocessedSource pp = Preprocess("/*x*/int a;", "t.c");
  // The comment is five bytes wide, so `int` stays at column 6.
  EXPECT_EQ(pp.text, "     int a;");
  EXPECT_TRUE(pp.included_standard_headers.empty());
  const auto tokens = Tokenize(pp);
  EXPECT_EQ(tokens[0].loc.column, 6);
}

TEST(PreprocessTest, IncludeIsRecordedAndBlanked) {
  const PreprocessedSource pp = Preprocess("#include <ctype.h>\nint a;", "t.c");
  EXPECT_EQ(pp.text, "\nint a;");
  EXPECT_EQ(pp.included_standard_headers, std::set<std::string>{"ctype.h"});
}

TEST(PreprocessTest, QuotedIncludeOfStandardHeader) {
  const PreprocessedSource pp = Preprocess("#include \"string.h\"\n", "t.c");
  EXPECT_EQ(pp.included_standard_headers, std::set<std::string>{"string.h"});
}

TEST(PreprocessTest, UnknownHeaderIsNotRecorded) {
  const PreprocessedSource pp = Preprocess("#include <unistd.h>\n", "t.c");
  EXPECT_TRUE(pp.included_standard_headers.empty());
}

TEST(PreprocessTest, FunctionLikeMacroIsUnsupported) {
  try {
    Preprocess("#define SQ(x) ((x)*(x))\n", "t.c");
    FAIL();
  } catch (const FrontendError& e) {
    EXPECT_EQ(e.kind(), FrontendError::Kind::kUnsupportedDirective);
    EXPECT_EQ(e.loc().line, 1);
    EXPECT_NE(std::string(e.what()).find("SQ"), std::string::npos);
  }
}

TEST(PreprocessTest, ConditionalsAreUnsupported) {
  for (const char* text : {"#if 1\n#endif\n", "#ifdef X\n#endif\n", "#ifndef X\n#endif\n"}) {
    EXPECT_EQ(ErrorKind([&] { Preprocess(text, "t.c"); }),
              FrontendError::Kind::kUnsupportedDirective)
        << text;
  }
}

TEST(PreprocessTest, LineCountIsPreserved) {
  const std::string text = "#include <stdio.h>\n/* a\n b\n c */ int x;\n// tail\n";
  const PreprocessedSource pp = Preprocess(text, "t.c");
  EXPECT_EQ(std::count(pp.text.begin(), pp.text.end(), '\n'),
            std::count(text.begin(), text.end(), '\n'));
}

TEST(PreprocessTest, UnterminatedCommentIsLexError) {
  EXPECT_EQ(ErrorKind([] { Preprocess("int a; /* open", "t.c"); }),
            FrontendError::Kind::kLexError);
}

TEST(LexerTest, EofExpandsToMarkedLiteral) {
  const auto tokens = Lex("#include <stdio.h>\na==EOF");
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_EQ(tokens[0].kind, TokenKind::kIdentifier);
  EXPECT_EQ(tokens[0].text, "a");
  EXPECT_EQ(tokens[1].kind, TokenKind::kPunctuator);
  EXPECT_EQ(tokens[1].text, "==");
  EXPECT_EQ(tokens[2].kind, TokenKind::kIntegerLiteral);
  EXPECT_EQ(tokens[2].text, "-1");
  EXPECT_EQ(tokens[2].from_standard_macro, StandardMacro::kEOF);
  EXPECT_EQ(tokens[3].kind, TokenKind::kEofMarker);
}

TEST(LexerTest, EofWithoutStdioIsPlainIdentifier) {
  const auto tokens = Lex("a==EOF");
  EXPECT_EQ(tokens[2].kind, TokenKind::kIdentifier);
  EXPECT_FALSE(tokens[2].from_standard_macro.has_value());
}

TEST(LexerTest, NullNeedsAnyHeader) {
  EXPECT_EQ(Lex("p = NULL;")[2].kind, TokenKind::kIdentifier);
  const auto tokens = Lex("#include <string.h>\np = NULL;");
  EXPECT_EQ(tokens[2].text, "0");
  EXPECT_EQ(tokens[2].from_standard_macro, StandardMacro::kNULL);
}

TEST(LexerTest, UnterminatedStringAtColumnOne) {
  try {
    Lex("\"abc");
    FAIL();
  } catch (const FrontendError& e) {
    EXPECT_EQ(e.kind(), FrontendError::Kind::kLexError);
    EXPECT_EQ(e.loc().line, 1);
    EXPECT_EQ(e.loc().column, 1);
  }
}

TEST(LexerTest, CompoundAssignment) {
  const auto tokens = Lex("x += 1;");
  ASSERT_EQ(tokens.size(), 5u);
  EXPECT_EQ(tokens[1].text, "+=");
  EXPECT_EQ(tokens[2].kind, TokenKind::kIntegerLiteral);
  EXPECT_EQ(tokens[4].kind, TokenKind::kEofMarker);
}

TEST(LexerTest, IllegalByte) {
  EXPECT_EQ(ErrorKind([] { Lex("int a @ b;"); }), FrontendError::Kind::kLexError);
}

TEST(LexerTest, KindsAndLiterals) {
  const auto tokens = Lex("while (c != 'x') f(1.5, \"s\\\"q\", 0x1F);");
  EXPECT_EQ(tokens[0].kind, TokenKind::kKeyword);
  EXPECT_EQ(tokens[4].kind, TokenKind::kCharLiteral);
  EXPECT_EQ(tokens[8].kind, TokenKind::kFloatLiteral);
  EXPECT_EQ(tokens[10].kind, TokenKind::kStringLiteral);
  EXPECT_EQ(tokens[10].text, "\"s\\\"q\"");
  EXPECT_EQ(tokens[12].kind, TokenKind::kIntegerLiteral);
}

TEST(LexerTest, MaximalMunch) {
  const auto tokens = Lex("a<<=b->c...d");
  EXPECT_EQ(tokens[1].text, "<<=");
  EXPECT_EQ(tokens[3].text, "->");
  EXPECT_EQ(tokens[5].text, "...");
}

TEST(LexerTest, ObjectMacroExpandsAtUseSite) {
  const auto tokens = Lex("#define LEN 16\nchar b[LEN];");
  EXPECT_EQ(tokens[3].text, "16");
  EXPECT_EQ(tokens[3].loc.line, 2);
  EXPECT_EQ(tokens[3].loc.column, 8);
}

TEST(ParserTest, ArrayParameterKeepsDeclarator) {
  const TranslationUnit tu = ParseSource("void f(int a[10]) {}", "t.c");
  ASSERT_EQ(tu.top_level.size(), 1u);
  const AstNode& fn = *tu.top_level[0];
  ASSERT_EQ(fn.kind, NodeKind::kFunctionDef);
  const AstNode& param = *fn.child(0);
  EXPECT_EQ(param.kind, NodeKind::kParameter);
  EXPECT_TRUE(param.array_declarator);
  EXPECT_EQ(param.array_extent, 10u);
  EXPECT_TRUE(param.type.IsPointer());
}

TEST(ParserTest, MinimalProgram) {
  const TranslationUnit tu = ParseSource("int main(void){return 0;}", "t.c");
  ASSERT_EQ(tu.top_level.size(), 1u);
  EXPECT_EQ(tu.top_level[0]->kind, NodeKind::kFunctionDef);
  EXPECT_EQ(tu.top_level[0]->text, "main");
}

TEST(ParserTest, GotoIsUnsupported) {
  try {
    ParseSource("void f(void) { goto out; }", "t.c");
    FAIL();
  } catch (const FrontendError& e) {
    EXPECT_EQ(e.kind(), FrontendError::Kind::kParseError);
    EXPECT_NE(std::string(e.what()).find("unsupported construct: goto"), std::string::npos);
  }
}

TEST(ParserTest, SubsetBoundaries) {
  for (const char* text : {
           "typedef int T;",
           "union U { int a; };",
           "enum E { A };",
           "void f(int x) { switch (x) { default: return; } }",
           "void f(void) { int m[2][2]; }",
           "void f(int (*cb)(int)) {}",
           "struct B { int x : 3; };",
           "void f(int n, ...) {}",
       }) {
    EXPECT_EQ(ErrorKind([&] { ParseSource(text, "t.c"); }), FrontendError::Kind::kParseError)
        << text;
  }
}

TEST(ParserTest, ErrorNamesExpectedToken) {
  try {
    ParseSource("int f(void) { return 0 }", "t.c");
    FAIL();
  } catch (const FrontendError& e) {
    EXPECT_NE(std::string(e.what()).find("';'"), std::string::npos) << e.what();
  }
}

TEST(ParserTest, VariadicLibraryCallParses) {
  const TranslationUnit tu =
      ParseSource("#include <stdio.h>\nvoid f(int v) { printf(\"%d %d\", v, v); }", "t.c");
  const AstNode& body = *tu.top_level[0]->children.back();
  const AstNode& call = *body.child(0)->child(0);
  EXPECT_EQ(call.kind, NodeKind::kCall);
  EXPECT_EQ(call.size(), 4u);
  EXPECT_EQ(call.child(0)->text, "printf");
}

TEST(ParserTest, Precedence) {
  const TranslationUnit tu = ParseSource("int f(int a, int b) { return a + b * 2 == 7 && a; }",
                                         "t.c");
  const AstNode& ret = *tu.top_level[0]->children.back()->child(0);
  const AstNode& e = *ret.child(0);
  ASSERT_EQ(e.op, "&&");
  ASSERT_EQ(e.child(0)->op, "==");
  ASSERT_EQ(e.child(0)->child(0)->op, "+");
  EXPECT_EQ(e.child(0)->child(0)->child(1)->op, "*");
}

TEST(ParserTest, SizeofHasOneOperand) {
  const TranslationUnit tu =
      ParseSource("int f(int a) { return sizeof a + sizeof(int) + sizeof(a); }", "t.c");
  int count = 0;
  Walk(tu, [&](const AstNode& n) {
    if (n.kind != NodeKind::kSizeofExpr) return;
    ++count;
    EXPECT_EQ(n.size(), 1u);
  });
  EXPECT_EQ(count, 3);
}

TEST(ParserTest, StringInitializerInfersExtent) {
  const TranslationUnit tu = ParseSource("char s[] = \"abc\";", "t.c");
  EXPECT_EQ(tu.top_level[0]->type.extent(), 4u);
}

TEST(ParserTest, IntegerLiteralValues) {
  EXPECT_EQ(ParseIntegerLiteral("42"), 42);
  EXPECT_EQ(ParseIntegerLiteral("0x1f"), 31);
  EXPECT_EQ(ParseIntegerLiteral("017"), 15);
  EXPECT_EQ(ParseIntegerLiteral("10UL"), 10);
  EXPECT_EQ(ParseIntegerLiteral("-1"), -1);
  EXPECT_FALSE(ParseIntegerLiteral("1.5").has_value());
}

TEST(ParserTest, NodeLocations) {
  const TranslationUnit tu = ParseSource("int f(int a) {\n  return a   +  1;\n}\n", "t.c");
  const AstNode& plus = *tu.top_level[0]->children.back()->child(0)->child(0);
  EXPECT_EQ(plus.loc.line, 2);
  EXPECT_EQ(plus.loc.column, 14);
  EXPECT_EQ(plus.child(0)->loc.column, 10);
}

}  // namespace
}  // namespace seclint
