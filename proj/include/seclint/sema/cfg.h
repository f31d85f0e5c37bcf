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

#ifndef SECLINT_SEMA_CFG_H_
#define SECLINT_SEMA_CFG_H_

#include <optional>
#include <string>
#include <vector>

#include "seclint/frontend/ast.h"
#include "seclint/sema/symbols.h"

namespace seclint {

struct CfgElement {
  enum class Kind {
    kStatement,  // Declaration, ExpressionStmt, Return, or a for-step expression
    kCondition,  // branch condition ending the block
  };
  Kind kind = Kind::kStatement;
  const AstNode* node = nullptr;
  bool loop_condition = false;
};

struct BasicBlock {
  int id = 0;
  std::vector<CfgElement> elements;
};

enum class EdgeKind { kFallthrough, kBranchTrue, kBranchFalse, kLoopBack };

const char* EdgeKindName(EdgeKind kind);

struct CfgEdge {
  int from = 0;
  int to = 0;
  EdgeKind kind = EdgeKind::kFallthrough;
  // Outcome of the condition ending `from` that selects this edge. Set for
  // every edge leaving a condition block, including do-while back edges.
  std::optional<bool> branch;
};

class Cfg {
 public:
  const Symbol* function = nullptr;
  const AstNode* definition = nullptr;
  std::vector<BasicBlock> blocks;
  std::vector<CfgEdge> edges;
  int entry = 0;
  int exit = 1;

  std::vector<const CfgEdge*> Successors(int block) const;
  std::vector<const CfgEdge*> Predecessors(int block) const;
  // A topological-ish order (reverse post-order from entry).
  std::vector<int> ReversePostOrder() const;
};

// Lowers structured control flow of a function definition. Short-circuit
// && / || (and !) in control conditions become separate condition blocks.
// Blocks unreachable from entry are dropped, except exit.
Cfg BuildCfg(const AstNode& function_def);

std::string DumpCfg(const Cfg& cfg);

}  // namespace seclint

#endif  // SECLINT_SEMA_CFG_H_
