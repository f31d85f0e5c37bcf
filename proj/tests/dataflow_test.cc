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

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "seclint/checkers/checkers.h"
#include "seclint/checkers/dataflow.h"
#include "seclint/sema/cfg.h"
#include "test_util.h"

namespace seclint {
namespace {

class DataflowTest : public ::testing::Test {
 protected:
  void Run(const std::string& src, std::string_view name = "f") {
    resolved_ = testing::ResolveSource(src);
    transfer_ = std::make_unique<TransferFunction>(resolved_->res.symbols);
    cfg_ = BuildCfg(*testing::FindFunction(resolved_->tu, name));
    flow_ = Propagate(cfg_, *transfer_);
  }
  const Symbol& Sym(std::string_view name) const {
    for (const Symbol& s : resolved_->res.symbols.all()) {
      if (s.name == name && s.kind != SymbolKind::kFunction) return s;
    }
    throw std::runtime_error("no symbol " + std::string(name));
  }
  const DataflowState& Exit() const { return flow_.block_in[static_cast<size_t>(cfg_.exit)]; }

  std::unique_ptr<testing::Resolved> resolved_;
  std::unique_ptr<TransferFunction> transfer_;
  Cfg cfg_;
  FlowResult flow_;
};

TEST_F(DataflowTest, LatticeJoin) {
  VarFacts a{Taint::kValidated, true, EnvPointer::kCurrent};
  VarFacts b{Taint::kTainted, false, EnvPointer::kStale};
  const VarFacts j = a.Join(b);
  EXPECT_EQ(j.taint, Taint::kTainted);
  EXPECT_TRUE(j.io_int);
  EXPECT_EQ(j.env, EnvPointer::kStale);
  EXPECT_EQ(a.Join(a), a);
  EXPECT_EQ(a.Join(b), b.Join(a));

  ErrnoPhase p = ErrnoPhase::Zeroed();
  p.JoinWith(ErrnoPhase::Tested());
  EXPECT_TRUE(p.zeroed && p.tested);
  EXPECT_FALSE(p.OnlyZeroed());
  EXPECT_TRUE(ErrnoPhase::Zeroed().OnlyZeroed());
}

TEST_F(DataflowTest, StraightLineTaint) {
  Run("int f(int argc, char *argv[]) {\n"
      "  int n = conv(argv[1]);\n"
      "  int m = 3;\n"
      "  int k = n + m;\n"
      "  return k;\n"
      "}\n",
      "f");
  // Only main's argv is tainted at entry.
  EXPECT_EQ(Exit().Var(Sym("n")).taint, Taint::kUntainted);

  Run("int main(int argc, char *argv[]) {\n"
      "  int n = conv(argv[1]);\n"
      "  int m = 3;\n"
      "  int k = n + m;\n"
      "  return k;\n"
      "}\n",
      "main");
  EXPECT_EQ(Exit().Var(Sym("argv")).taint, Taint::kTainted);
  EXPECT_EQ(Exit().Var(Sym("n")).taint, Taint::kTainted);
  EXPECT_EQ(Exit().Var(Sym("m")).taint, Taint::kUntainted);
  EXPECT_EQ(Exit().Var(Sym("k")).taint, Taint::kTainted);
  EXPECT_EQ(Exit().Var(Sym("argc")).taint, Taint::kUntainted);
}

TEST_F(DataflowTest, StdioReadTaintsBufferAndResult) {
  Run("#include <stdio.h>\n"
      "void f(void) { char buf[8]; int c; fgets(buf, 8, stdin); c = getchar(); }");
  EXPECT_EQ(Exit().Var(Sym("buf")).taint, Taint::kTainted);
  EXPECT_EQ(Exit().Var(Sym("c")).taint, Taint::kTainted);
  EXPECT_TRUE(Exit().Var(Sym("c")).io_int);
}

TEST_F(DataflowTest, RelationalComparisonValidatesOnBothEdges) {
  Run("#include <stdio.h>\n"
      "int f(void) { int n = getchar(); int r = 0; if (n < 10) { r = 1; } else { r = 2; } "
      "return r; }");
  EXPECT_EQ(Exit().Var(Sym("n")).taint, Taint::kValidated);
}

TEST_F(DataflowTest, EqualityDoesNotValidate) {
  Run("#include <stdio.h>\n"
      "int f(void) { int n = getchar(); int r = 0; if (n == 10) { r = 1; } return r; }");
  EXPECT_EQ(Exit().Var(Sym("n")).taint, Taint::kTainted);
}

TEST_F(DataflowTest, ValidationOnOnePathOnlyJoinsToTainted) {
  Run("#include <stdio.h>\n"
      "int f(int flag) { int n = getchar(); int r = 0;\n"
      "  if (flag) { if (n < 4) { r = 1; } } else { r = 2; }\n"
      "  return r + n; }");
  // Validated under `flag`, raw on the else branch.
  EXPECT_EQ(Exit().Var(Sym("n")).taint, Taint::kTainted);
}

TEST_F(DataflowTest, LoopReTaintReachesHeadWithinBound) {
  Run("#include <stdio.h>\n"
      "void f(void) {\n"
      "  int a[10];\n"
      "  int i = 0;\n"
      "  int x = 0;\n"
      "  while (i < 10) {\n"
      "    a[i] = x;\n"
      "    x = getchar();\n"
      "    i++;\n"
      "  }\n"
      "}\n");
  const auto rpo = cfg_.ReversePostOrder();
  EXPECT_LE(flow_.passes, static_cast<int>(cfg_.blocks.size()) + 1);
  int head = -1;
  for (const CfgEdge& e : cfg_.edges) {
    if (e.kind == EdgeKind::kLoopBack) head = e.to;
  }
  ASSERT_GE(head, 0);
  EXPECT_EQ(flow_.block_in[static_cast<size_t>(head)].Var(Sym("x")).taint, Taint::kTainted);
  EXPECT_EQ(flow_.block_in[static_cast<size_t>(cfg_.entry)].Var(Sym("x")).taint,
            Taint::kUntainted);
  (void)rpo;
}

TEST_F(DataflowTest, EmptyFunctionExitEqualsEntry) {
  Run("void f(void) { }");
  DataflowState entry = transfer_->EntryState(cfg_);
  EXPECT_EQ(Exit(), entry);
}

TEST_F(DataflowTest, ErrnoPhases) {
  Run("#include <errno.h>\n#include <stdlib.h>\n"
      "long f(const char *s) { long v; errno = 0; v = strtol(s, 0, 10); return v; }");
  EXPECT_EQ(Exit().errno_phase.calls.size(), 1u);
  EXPECT_FALSE(Exit().errno_phase.indeterminate);

  Run("#include <errno.h>\n#include <stdlib.h>\n"
      "long f(const char *s) { long v; errno = 0; v = strtol(s, 0, 10); "
      "if (errno) { v = 0; } return v; }");
  EXPECT_TRUE(Exit().errno_phase.tested);
  EXPECT_TRUE(Exit().errno_phase.calls.empty());
}

TEST_F(DataflowTest, EnvPointersGoStale) {
  Run("#include <stdlib.h>\n"
      "void f(void) { char *a = getenv(\"A\"); char *b = getenv(\"B\"); }");
  EXPECT_EQ(Exit().Var(Sym("a")).env, EnvPointer::kStale);
  EXPECT_EQ(Exit().Var(Sym("b")).env, EnvPointer::kCurrent);
  EXPECT_EQ(Exit().Var(Sym("b")).taint, Taint::kTainted);
}

TEST_F(DataflowTest, FixpointIsIdempotent) {
  Run("#include <stdio.h>\n"
      "int f(int n) { int s = 0; int c; while ((c = getchar()) != EOF) { if (c < 3) s += c; "
      "else { do { n--; } while (n > s); } } return s + n; }");
  for (const BasicBlock& block : cfg_.blocks) {
    const auto b = static_cast<size_t>(block.id);
    DataflowState in = block.id == cfg_.entry ? transfer_->EntryState(cfg_) : DataflowState{};
    if (block.id != cfg_.entry) {
      in.vars.assign(resolved_->res.symbols.size(), VarFacts{});
      for (const CfgEdge* e : cfg_.Predecessors(block.id)) {
        DataflowState along = flow_.block_out[static_cast<size_t>(e->from)];
        transfer_->ApplyEdge(cfg_, *e, along);
        in.JoinWith(along);
      }
    }
    EXPECT_EQ(in, flow_.block_in[b]) << "block " << block.id;
    DataflowState out = flow_.block_in[b];
    for (const CfgElement& el : block.elements) transfer_->Apply(el, out);
    EXPECT_EQ(out, flow_.block_out[b]) << "block " << block.id;
  }
  const FlowResult again = Propagate(cfg_, *transfer_);
  EXPECT_EQ(again.block_in, flow_.block_in);
  EXPECT_EQ(again.block_out, flow_.block_out);
}

class RecordingObserver : public FlowObserver {
 public:
  void OnSink(const AstNode& sink, const AstNode&, SinkKind kind, Taint taint) override {
    sinks.push_back(std::string(SinkKindName(kind)) + ":" + std::to_string(sink.loc.line) + ":" +
                    TaintName(taint));
  }
  std::vector<std::string> sinks;
};

TEST_F(DataflowTest, ReplayReportsSinks) {
  Run("#include <stdio.h>\n#include <string.h>\n"
      "void f(void) {\n"
      "  char d[8];\n"
      "  int a[4];\n"
      "  int n = getchar();\n"
      "  a[n] = 0;\n"
      "  memcpy(d, d, n);\n"
      "  if (n < 4) { a[n] = 1; }\n"
      "}\n");
  RecordingObserver obs;
  Replay(cfg_, flow_, *transfer_, obs);
  std::sort(obs.sinks.begin(), obs.sinks.end());
  EXPECT_EQ(obs.sinks, (std::vector<std::string>{"array index:7:tainted",
                                                 "array index:9:validated",
                                                 "size argument:8:tainted"}));
}

}  // namespace
}  // namespace seclint
