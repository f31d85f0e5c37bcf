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
#include <set>
#include <string>

#include "seclint/sema/cfg.h"
#include "test_util.h"

namespace seclint {
namespace {

using testing::ResolveSource;

class CfgTest : public ::testing::Test {
 protected:
  const Cfg& Build(const std::string& src, std::string_view name = "f") {
    resolved_ = ResolveSource(src);
    cfg_ = BuildCfg(*testing::FindFunction(resolved_->tu, name));
    return cfg_;
  }
  int CountEdges(EdgeKind kind) const {
    return static_cast<int>(std::count_if(cfg_.edges.begin(), cfg_.edges.end(),
                                          [&](const CfgEdge& e) { return e.kind == kind; }));
  }
  std::unique_ptr<testing::Resolved> resolved_;
  Cfg cfg_;
};

TEST_F(CfgTest, SingleReturnHasEntryAndExit) {
  const Cfg& cfg = Build("int f(void) { return 0; }");
  EXPECT_EQ(cfg.blocks.size(), 2u);
  ASSERT_EQ(cfg.edges.size(), 1u);
  EXPECT_EQ(cfg.edges[0].from, cfg.entry);
  EXPECT_EQ(cfg.edges[0].to, cfg.exit);
  EXPECT_EQ(cfg.blocks[static_cast<size_t>(cfg.entry)].elements.size(), 1u);
}

TEST_F(CfgTest, IfElseMakesDiamond) {
  const Cfg& cfg = Build("int f(int x) { int y; if (x > 0) y = 1; else y = 2; return y; }");
  EXPECT_EQ(CountEdges(EdgeKind::kBranchTrue), 1);
  EXPECT_EQ(CountEdges(EdgeKind::kBranchFalse), 1);
  // The join block has two predecessors.
  bool found_join = false;
  for (const BasicBlock& b : cfg.blocks) {
    if (b.id != cfg.exit && cfg.Predecessors(b.id).size() == 2) found_join = true;
  }
  EXPECT_TRUE(found_join);
  const auto& entry = cfg.blocks[static_cast<size_t>(cfg.entry)].elements;
  ASSERT_FALSE(entry.empty());
  EXPECT_EQ(entry.back().kind, CfgElement::Kind::kCondition);
  EXPECT_FALSE(entry.back().loop_condition);
}

TEST_F(CfgTest, WhileLoopHasBackEdge) {
  const Cfg& cfg = Build("void f(int n) { int i = 0; while (i < n) { i++; } }");
  EXPECT_EQ(CountEdges(EdgeKind::kLoopBack), 1);
  const CfgEdge* back = nullptr;
  for (const CfgEdge& e : cfg.edges) {
    if (e.kind == EdgeKind::kLoopBack) back = &e;
  }
  const auto& head = cfg.blocks[static_cast<size_t>(back->to)].elements;
  ASSERT_FALSE(head.empty());
  EXPECT_TRUE(head.back().loop_condition);
}

TEST_F(CfgTest, ForLoopStepRunsBeforeBackEdge) {
  const Cfg& cfg = Build("void f(int n) { int i; for (i = 0; i < n; i++) { n--; } }");
  EXPECT_EQ(CountEdges(EdgeKind::kLoopBack), 1);
  for (const CfgEdge& e : cfg.edges) {
    if (e.kind != EdgeKind::kLoopBack) continue;
    const auto& tail = cfg.blocks[static_cast<size_t>(e.from)].elements;
    ASSERT_FALSE(tail.empty());
    const AstNode* step = tail.back().node;
    EXPECT_EQ(step->kind, NodeKind::kUnaryOp);
    EXPECT_TRUE(step->postfix);
  }
}

TEST_F(CfgTest, NestedLoopsAndShortCircuit) {
  Build("void f(int n, int m) { while (n && m) { do { m--; } while (m > n); n--; } }");
  EXPECT_EQ(CountEdges(EdgeKind::kLoopBack), 2);
  // `n && m` splits into two branching blocks; the do-while's true edge is
  // its back edge.
  EXPECT_EQ(CountEdges(EdgeKind::kBranchTrue), 2);
}

TEST_F(CfgTest, ReturnInsideBranchSkipsRest) {
  const Cfg& cfg = Build("int f(int x) { if (x) return 1; return 2; }");
  EXPECT_EQ(cfg.Predecessors(cfg.exit).size(), 2u);
}

TEST_F(CfgTest, DeadCodeAfterReturnIsPruned) {
  const Cfg& cfg = Build("int f(void) { return 1; f(); }");
  EXPECT_EQ(cfg.ReversePostOrder().size(), cfg.blocks.size());
  EXPECT_EQ(cfg.blocks.size(), 2u);
}

TEST_F(CfgTest, Invariants) {
  const Cfg& cfg = Build(
      "int f(int a, int b) { int s = 0; while (a < b) { if (a > 3) { s++; } else { do { b--; } "
      "while (b > 10); } a++; } for (;;) { if (s) return s; } }");
  EXPECT_TRUE(cfg.blocks[static_cast<size_t>(cfg.exit)].elements.empty());
  EXPECT_TRUE(cfg.Successors(cfg.exit).empty());
  for (size_t i = 0; i < cfg.blocks.size(); ++i) EXPECT_EQ(cfg.blocks[i].id, static_cast<int>(i));
  for (const BasicBlock& b : cfg.blocks) {
    const auto succ = cfg.Successors(b.id);
    const bool ends_in_condition =
        !b.elements.empty() && b.elements.back().kind == CfgElement::Kind::kCondition;
    if (ends_in_condition) {
      EXPECT_EQ(succ.size(), 2u);
      std::set<bool> branches;
      for (const CfgEdge* e : succ) {
        ASSERT_TRUE(e->branch.has_value());
        branches.insert(*e->branch);
      }
      EXPECT_EQ(branches.size(), 2u);
    } else if (b.id != cfg.exit) {
      EXPECT_LE(succ.size(), 1u);
    }
    for (size_t i = 0; i + 1 < b.elements.size(); ++i) {
      EXPECT_EQ(b.elements[i].kind, CfgElement::Kind::kStatement);
    }
  }
  const auto rpo = cfg.ReversePostOrder();
  ASSERT_FALSE(rpo.empty());
  EXPECT_EQ(rpo.front(), cfg.entry);
  EXPECT_NE(std::find(rpo.begin(), rpo.end(), cfg.exit), rpo.end());
}

TEST_F(CfgTest, DumpIsStable) {
  Build("int f(int x) { while (x) x--; return x; }");
  const std::string first = DumpCfg(cfg_);
  const Cfg again = BuildCfg(*testing::FindFunction(resolved_->tu, "f"));
  EXPECT_EQ(first, DumpCfg(again));
  EXPECT_NE(first.find("loopback"), std::string::npos) << first;
}

}  // namespace
}  // namespace seclint
