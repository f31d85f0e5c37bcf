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

#include "seclint/sema/cfg.h"

#include <algorithm>
#include <functional>

namespace seclint {

const char* EdgeKindName(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kFallthrough: return "fallthrough";
    case EdgeKind::kBranchTrue: return "true";
    case EdgeKind::kBranchFalse: return "false";
    case EdgeKind::kLoopBack: return "loopback";
  }
  return "?";
}

std::vector<const CfgEdge*> Cfg::Successors(int block) const {
  std::vector<const CfgEdge*> out;
  for (const CfgEdge& e : edges) {
    if (e.from == block) out.push_back(&e);
  }
  return out;
}

std::vector<const CfgEdge*> Cfg::Predecessors(int block) const {
  std::vector<const CfgEdge*> out;
  for (const CfgEdge& e : edges) {
    if (e.to == block) out.push_back(&e);
  }
  return out;
}

std::vector<int> Cfg::ReversePostOrder() const {
  std::vector<bool> seen(blocks.size(), false);
  std::vector<int> post;
  std::function<void(int)> visit = [&](int b) {
    seen[static_cast<size_t>(b)] = true;
    for (const CfgEdge* e : Successors(b)) {
      if (!seen[static_cast<size_t>(e->to)]) visit(e->to);
    }
    post.push_back(b);
  };
  visit(entry);
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (!seen[b]) visit(static_cast<int>(b));
  }
  std::reverse(post.begin(), post.end());
  return post;
}

namespace {

class CfgBuilder {
 public:
  explicit CfgBuilder(const AstNode& fn) {
    cfg_.definition = &fn;
    cfg_.function = fn.resolved_symbol;
    cfg_.entry = NewBlock();
    cfg_.exit = NewBlock();
    current_ = cfg_.entry;
  }

  Cfg Build() {
    const AstNode& body = *cfg_.definition->children.back();
    Statement(body);
    if (current_ >= 0) AddEdge(current_, cfg_.exit, EdgeKind::kFallthrough, std::nullopt);
    Prune();
    return std::move(cfg_);
  }

 private:
  int NewBlock() {
    const int id = static_cast<int>(cfg_.blocks.size());
    cfg_.blocks.push_back({id, {}});
    return id;
  }

  void AddEdge(int from, int to, EdgeKind kind, std::optional<bool> branch) {
    cfg_.edges.push_back({from, to, kind, branch});
  }

  int Current() {
    // Code after a return lands in a fresh block that Prune() drops.
    if (current_ < 0) current_ = NewBlock();
    return current_;
  }

  void Append(const AstNode& node) {
    cfg_.blocks[static_cast<size_t>(Current())].elements.push_back(
        {CfgElement::Kind::kStatement, &node, false});
  }

  void Condition(const AstNode& expr, int from, int on_true, int on_false,
                 bool loop, int back_target) {
    if (expr.kind == NodeKind::kBinaryOp && (expr.op == "&&" || expr.op == "||")) {
      const int mid = NewBlock();
      if (expr.op == "&&") {
        Condition(*expr.child(0), from, mid, on_false, loop, back_target);
      } else {
        Condition(*expr.child(0), from, on_true, mid, loop, back_target);
      }
      Condition(*expr.child(1), mid, on_true, on_false, loop, back_target);
      return;
    }
    if (expr.kind == NodeKind::kUnaryOp && expr.op == "!") {
      Condition(*expr.child(0), from, on_false, on_true, loop, back_target);
      return;
    }
    cfg_.blocks[static_cast<size_t>(from)].elements.push_back(
        {CfgElement::Kind::kCondition, &expr, loop});
    AddEdge(from, on_true, on_true == back_target ? EdgeKind::kLoopBack : EdgeKind::kBranchTrue,
            true);
    AddEdge(from, on_false,
            on_false == back_target ? EdgeKind::kLoopBack : EdgeKind::kBranchFalse, false);
  }

  void Statement(const AstNode& node) {
    switch (node.kind) {
      case NodeKind::kCompoundStmt:
        for (const auto& item : node.children) Statement(*item);
        return;
      case NodeKind::kDeclaration:
      case NodeKind::kExpressionStmt:
        Append(node);
        return;
      case NodeKind::kReturn:
        Append(node);
        AddEdge(current_, cfg_.exit, EdgeKind::kFallthrough, std::nullopt);
        current_ = -1;
        return;
      case NodeKind::kIf: {
        const int from = Current();
        const int then_block = NewBlock();
        const int else_block = node.size() > 2 ? NewBlock() : -1;
        const int join = NewBlock();
        Condition(*node.child(0), from, then_block, else_block >= 0 ? else_block : join,
                  false, -1);
        current_ = then_block;
        Statement(*node.child(1));
        if (current_ >= 0) AddEdge(current_, join, EdgeKind::kFallthrough, std::nullopt);
        if (else_block >= 0) {
          current_ = else_block;
          Statement(*node.child(2));
          if (current_ >= 0) AddEdge(current_, join, EdgeKind::kFallthrough, std::nullopt);
        }
        current_ = join;
        return;
      }
      case NodeKind::kWhile: {
        const int from = Current();
        const int header = NewBlock();
        AddEdge(from, header, EdgeKind::kFallthrough, std::nullopt);
        const int body = NewBlock();
        const int after = NewBlock();
        Condition(*node.child(0), header, body, after, true, -1);
        current_ = body;
        Statement(*node.child(1));
        if (current_ >= 0) AddEdge(current_, header, EdgeKind::kLoopBack, std::nullopt);
        current_ = after;
        return;
      }
      case NodeKind::kFor: {
        const AstNode& init = *node.child(0);
        const AstNode& cond = *node.child(1);
        const AstNode& step = *node.child(2);
        if (init.kind != NodeKind::kEmptyStmt) Statement(init);
        const int from = Current();
        const int header = NewBlock();
        AddEdge(from, header, EdgeKind::kFallthrough, std::nullopt);
        const int body = NewBlock();
        const int step_block = NewBlock();
        const int after = NewBlock();
        if (cond.kind == NodeKind::kEmptyStmt) {
          AddEdge(header, body, EdgeKind::kFallthrough, std::nullopt);
        } else {
          Condition(cond, header, body, after, true, -1);
        }
        current_ = body;
        Statement(*node.child(3));
        if (current_ >= 0) AddEdge(current_, step_block, EdgeKind::kFallthrough, std::nullopt);
        if (step.kind != NodeKind::kEmptyStmt) {
          cfg_.blocks[static_cast<size_t>(step_block)].elements.push_back(
              {CfgElement::Kind::kStatement, &step, false});
        }
        AddEdge(step_block, header, EdgeKind::kLoopBack, std::nullopt);
        current_ = after;
        return;
      }
      case NodeKind::kDo: {
        const int from = Current();
        const int body_head = NewBlock();
        AddEdge(from, body_head, EdgeKind::kFallthrough, std::nullopt);
        current_ = body_head;
        Statement(*node.child(0));
        const int cond_block = NewBlock();
        if (current_ >= 0) AddEdge(current_, cond_block, EdgeKind::kFallthrough, std::nullopt);
        const int after = NewBlock();
        Condition(*node.child(1), cond_block, body_head, after, true, body_head);
        current_ = after;
        return;
      }
      default:
        // Empty statements, struct definitions and block-scope prototypes
        // have no runtime effect.
        return;
    }
  }

  void Prune() {
    std::vector<bool> reachable(cfg_.blocks.size(), false);
    std::vector<int> work{cfg_.entry};
    reachable[static_cast<size_t>(cfg_.entry)] = true;
    while (!work.empty()) {
      const int b = work.back();
      work.pop_back();
      for (const CfgEdge& e : cfg_.edges) {
        if (e.from == b && !reachable[static_cast<size_t>(e.to)]) {
          reachable[static_cast<size_t>(e.to)] = true;
          work.push_back(e.to);
        }
      }
    }
    reachable[static_cast<size_t>(cfg_.exit)] = true;

    std::vector<int> remap(cfg_.blocks.size(), -1);
    std::vector<BasicBlock> kept;
    for (size_t b = 0; b < cfg_.blocks.size(); ++b) {
      if (!reachable[b]) continue;
      remap[b] = static_cast<int>(kept.size());
      kept.push_back(std::move(cfg_.blocks[b]));
      kept.back().id = remap[b];
    }
    std::vector<CfgEdge> edges;
    for (const CfgEdge& e : cfg_.edges) {
      if (!reachable[static_cast<size_t>(e.from)]) continue;
      edges.push_back({remap[static_cast<size_t>(e.from)], remap[static_cast<size_t>(e.to)],
                       e.kind, e.branch});
    }
    cfg_.entry = remap[static_cast<size_t>(cfg_.entry)];
    cfg_.exit = remap[static_cast<size_t>(cfg_.exit)];
    cfg_.blocks = std::move(kept);
    cfg_.edges = std::move(edges);
  }

  Cfg cfg_;
  int current_ = -1;
};

}  // namespace

Cfg BuildCfg(const AstNode& function_def) { return CfgBuilder(function_def).Build(); }

std::string DumpCfg(const Cfg& cfg) {
  std::string out;
  for (const BasicBlock& block : cfg.blocks) {
    out += "B" + std::to_string(block.id);
    if (block.id == cfg.entry) out += " (entry)";
    if (block.id == cfg.exit) out += " (exit)";
    out += ":";
    for (const CfgElement& el : block.elements) {
      out += el.kind == CfgElement::Kind::kCondition ? " cond@" : " stmt@";
      out += std::to_string(el.node->loc.line) + ":" + std::to_string(el.node->loc.column);
    }
    out += " ->";
    for (const CfgEdge* e : cfg.Successors(block.id)) {
      out += " B" + std::to_string(e->to) + "(" + EdgeKindName(e->kind) + ")";
    }
    out += "\n";
  }
  return out;
}

}  // namespace seclint
