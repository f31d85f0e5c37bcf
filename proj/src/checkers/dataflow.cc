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

#include "seclint/checkers/dataflow.h"

#include <algorithm>

#include "seclint/sema/essential_type.h"
#include "seclint/sema/library.h"

namespace seclint {

const char* TaintName(Taint t) {
  switch (t) {
    case Taint::kUntainted: return "untainted";
    case Taint::kValidated: return "validated";
    case Taint::kTainted: return "tainted";
  }
  return "?";
}

const char* SinkKindName(SinkKind kind) {
  switch (kind) {
    case SinkKind::kArrayIndex: return "array index";
    case SinkKind::kSizeArgument: return "size argument";
    case SinkKind::kLoopBound: return "loop bound";
    case SinkKind::kSystemArgument: return "system() argument";
  }
  return "?";
}

VarFacts VarFacts::Join(const VarFacts& other) const {
  return {std::max(taint, other.taint), io_int || other.io_int, std::max(env, other.env)};
}

void ErrnoPhase::JoinWith(const ErrnoPhase& other) {
  indeterminate |= other.indeterminate;
  zeroed |= other.zeroed;
  tested |= other.tested;
  calls.insert(other.calls.begin(), other.calls.end());
}

std::string ErrnoPhase::ToString() const {
  std::string out = "{";
  auto add = [&out](const std::string& s) {
    if (out.size() > 1) out += ",";
    out += s;
  };
  if (indeterminate) add("Indeterminate");
  if (zeroed) add("Zeroed");
  if (tested) add("Tested");
  for (const auto& [id, call] : calls) add("CallMade@" + std::to_string(call->loc.line));
  return out + "}";
}

void DataflowState::JoinWith(const DataflowState& other) {
  if (!other.reachable) return;
  if (!reachable) {
    *this = other;
    return;
  }
  for (size_t i = 0; i < vars.size(); ++i) vars[i] = vars[i].Join(other.vars[i]);
  errno_phase.JoinWith(other.errno_phase);
}

namespace {

bool IsRelational(const std::string& op) {
  return op == "<" || op == "<=" || op == ">" || op == ">=";
}

bool IsEquality(const std::string& op) { return op == "==" || op == "!="; }

bool IsTrackedVariable(const Symbol* s) {
  return s && (s->kind == SymbolKind::kVariable || s->kind == SymbolKind::kParameter) &&
         !s->is_errno;
}

// Evaluates one CFG element against a state.
class Interpreter {
 public:
  Interpreter(const SymbolTable& symbols, DataflowState& state, FlowObserver* observer)
      : symbols_(symbols), state_(state), observer_(observer) {}

  void Element(const CfgElement& element) {
    const AstNode& node = *element.node;
    if (element.kind == CfgElement::Kind::kCondition) {
      Condition(node, element.loop_condition);
      return;
    }
    switch (node.kind) {
      case NodeKind::kDeclaration: {
        const Symbol* var = node.resolved_symbol;
        VarFacts facts;
        if (!node.children.empty()) facts = Eval(*node.child(0));
        if (IsTrackedVariable(var)) Assign(*var, facts);
        return;
      }
      case NodeKind::kExpressionStmt:
      case NodeKind::kReturn:
        for (const auto& child : node.children) Eval(*child);
        return;
      default:
        if (node.IsExpression()) Eval(node);
        return;
    }
  }

 private:
  void Sink(const AstNode& sink, const AstNode& site, SinkKind kind, Taint taint) {
    if (observer_) observer_->OnSink(sink, site, kind, taint);
  }

  void EnvAccessEvent(const AstNode& site, EnvAccess access, EnvPointer status) {
    if (observer_ && status != EnvPointer::kNone) observer_->OnEnvAccess(site, access, status);
  }

  void Condition(const AstNode& cond, bool loop) {
    if (!loop) {
      Eval(cond);
      return;
    }
    const AstNode& e = StripCasts(cond);
    if (e.kind == NodeKind::kBinaryOp && IsRelational(e.op)) {
      const VarFacts lhs = Eval(*e.child(0));
      const VarFacts rhs = Eval(*e.child(1));
      Sink(*e.child(0), cond, SinkKind::kLoopBound, lhs.taint);
      Sink(*e.child(1), cond, SinkKind::kLoopBound, rhs.taint);
      return;
    }
    const VarFacts value = Eval(cond);
    if (e.kind == NodeKind::kBinaryOp && IsEquality(e.op)) return;
    Sink(cond, cond, SinkKind::kLoopBound, value.taint);
  }

  // Stores into a variable with implicit conversion to its declared type.
  void Assign(const Symbol& var, VarFacts facts) {
    const TypeDesc& type = var.declared_type;
    if (!type.IsInteger() || type.IsCharacter()) facts.io_int = false;
    if (!type.IsPointerLike()) facts.env = EnvPointer::kNone;
    state_.Var(var) = facts;
  }

  void WeakUpdate(const Symbol* var, Taint taint) {
    if (!IsTrackedVariable(var)) return;
    VarFacts& facts = state_.Var(*var);
    facts.taint = std::max(facts.taint, taint);
  }

  // Evaluates the pointer designating the object an lvalue writes to,
  // raising index sinks but no read events.
  VarFacts StoreTarget(const AstNode& lhs, VarFacts value) {
    const AstNode& e = StripCasts(lhs);
    switch (e.kind) {
      case NodeKind::kIdentifierRef: {
        const Symbol* s = e.resolved_symbol;
        if (IsTrackedVariable(s)) Assign(*s, value);
        return {};
      }
      case NodeKind::kArraySubscript: {
        const VarFacts base = Eval(*e.child(0));
        const VarFacts index = Eval(*e.child(1));
        Sink(*e.child(1), e, SinkKind::kArrayIndex, index.taint);
        EnvAccessEvent(e, EnvAccess::kWrite, base.env);
        WeakUpdate(BaseVariable(*e.child(0)), value.taint);
        return base;
      }
      case NodeKind::kUnaryOp:
        if (e.op == "*") {
          const VarFacts base = Eval(*e.child(0));
          EnvAccessEvent(e, EnvAccess::kWrite, base.env);
          WeakUpdate(BaseVariable(*e.child(0)), value.taint);
          return base;
        }
        break;
      case NodeKind::kMemberAccess: {
        const VarFacts base = Eval(*e.child(0));
        if (e.op == "->") EnvAccessEvent(e, EnvAccess::kWrite, base.env);
        WeakUpdate(BaseVariable(*e.child(0)), value.taint);
        return base;
      }
      default:
        break;
    }
    Eval(e);
    return {};
  }

  VarFacts Assignment(const AstNode& node) {
    const AstNode& lhs = *node.child(0);
    const AstNode& rhs = *node.child(1);
    const Symbol* target = StripCasts(lhs).kind == NodeKind::kIdentifierRef
                               ? StripCasts(lhs).resolved_symbol
                               : nullptr;
    if (target && target->is_errno) {
      if (node.op != "=") Eval(lhs);
      Eval(rhs);
      const auto zero = FoldIntegerConstant(rhs, symbols_);
      state_.errno_phase = node.op == "=" && zero && *zero == 0 ? ErrnoPhase::Zeroed()
                                                                : ErrnoPhase::Indeterminate();
      return {};
    }
    VarFacts value = Eval(rhs);
    if (node.op != "=") {
      const VarFacts old = Eval(lhs);
      value = old.Join(value);
      value.io_int = false;
    }
    StoreTarget(lhs, value);
    return value;
  }

  VarFacts Call(const AstNode& call) {
    const LibraryFunctionInfo* lib = call.library;
    const size_t n_args = call.size() - 1;
    std::vector<VarFacts> args(n_args);
    for (size_t i = 0; i < n_args; ++i) args[i] = Eval(*call.child(i + 1));

    Taint joined = Taint::kUntainted;
    for (const VarFacts& a : args) joined = std::max(joined, a.taint);

    if (!lib) {
      for (size_t i = 0; i < n_args; ++i) {
        EnvAccessEvent(*call.child(i + 1), EnvAccess::kRead, args[i].env);
      }
      return {joined, false, EnvPointer::kNone};
    }

    const bool copies_into_first =
        (lib->Has(LibraryFamily::kMemCompareCopy) && lib->name != "memcmp") ||
        lib->Has(LibraryFamily::kStringUnbounded) || lib->Has(LibraryFamily::kStringBounded);

    for (size_t i = 0; i < n_args; ++i) {
      const AstNode& arg = *call.child(i + 1);
      const ParamRole role = lib->RoleOf(i);
      if (role == ParamRole::kSize && (lib->Has(LibraryFamily::kMemCompareCopy) ||
                                       lib->Has(LibraryFamily::kStringBounded))) {
        Sink(arg, call, SinkKind::kSizeArgument, args[i].taint);
      }
      if (lib->name == "system") Sink(arg, call, SinkKind::kSystemArgument, args[i].taint);
      const bool writes = (copies_into_first && i == 0) ||
                          (lib->Has(LibraryFamily::kStdioRead) && role == ParamRole::kBuffer);
      EnvAccessEvent(arg, writes ? EnvAccess::kWrite : EnvAccess::kRead, args[i].env);
    }

    if (copies_into_first && n_args > 0) {
      Taint copied = Taint::kUntainted;
      for (size_t i = 1; i < n_args; ++i) {
        if (lib->RoleOf(i) != ParamRole::kSize) copied = std::max(copied, args[i].taint);
      }
      WeakUpdate(BaseVariable(*call.child(1)), copied);
    }

    VarFacts result{joined, lib->returns_io_int, EnvPointer::kNone};
    if (lib->Has(LibraryFamily::kStdioRead)) {
      result.taint = Taint::kTainted;
      for (size_t i = 0; i < n_args; ++i) {
        if (lib->RoleOf(i) == ParamRole::kBuffer) {
          const Symbol* target = BaseVariable(*call.child(i + 1));
          if (IsTrackedVariable(target)) state_.Var(*target).taint = Taint::kTainted;
        }
      }
    }
    if (lib->Has(LibraryFamily::kErrnoSetting)) {
      if (observer_) observer_->OnErrnoSettingCall(call, state_.errno_phase);
      state_.errno_phase = ErrnoPhase::CallMade(call);
    }
    if (lib->Has(LibraryFamily::kEnvPointerReturning)) {
      for (VarFacts& v : state_.vars) {
        if (v.env == EnvPointer::kCurrent) v.env = EnvPointer::kStale;
      }
      result.env = EnvPointer::kCurrent;
      result.taint = lib->name == "getenv" ? Taint::kTainted : Taint::kUntainted;
    }
    return result;
  }

  VarFacts Eval(const AstNode& e) {
    switch (e.kind) {
      case NodeKind::kIdentifierRef: {
        const Symbol* s = e.resolved_symbol;
        if (!s) return {};
        if (s->is_errno) {
          if (observer_) observer_->OnErrnoRead(e, state_.errno_phase);
          // Re-reading after a test stays meaningful; a read never
          // resurrects CallMade.
          state_.errno_phase = ErrnoPhase::Tested();
          return {};
        }
        if (IsTrackedVariable(s)) return state_.Var(*s);
        return {};
      }
      case NodeKind::kLiteral:
      case NodeKind::kSizeofExpr:
      case NodeKind::kTypeName:
        return {};
      case NodeKind::kAssignment:
        return Assignment(e);
      case NodeKind::kCall:
        return Call(e);
      case NodeKind::kArraySubscript: {
        const VarFacts base = Eval(*e.child(0));
        const VarFacts index = Eval(*e.child(1));
        Sink(*e.child(1), e, SinkKind::kArrayIndex, index.taint);
        EnvAccessEvent(e, EnvAccess::kRead, base.env);
        return {base.taint, false, EnvPointer::kNone};
      }
      case NodeKind::kMemberAccess: {
        const VarFacts base = Eval(*e.child(0));
        if (e.op == "->") EnvAccessEvent(e, EnvAccess::kRead, base.env);
        return {base.taint, false, EnvPointer::kNone};
      }
      case NodeKind::kUnaryOp: {
        const AstNode& operand = *e.child(0);
        if (e.op == "&") {
          const AstNode& inner = StripCasts(operand);
          if (inner.kind == NodeKind::kArraySubscript) {
            const VarFacts base = Eval(*inner.child(0));
            const VarFacts index = Eval(*inner.child(1));
            Sink(*inner.child(1), inner, SinkKind::kArrayIndex, index.taint);
            return {base.taint, false, base.env};
          }
          if (inner.kind == NodeKind::kUnaryOp && inner.op == "*") {
            return Eval(*inner.child(0));
          }
          VarFacts v = Eval(operand);
          return {v.taint, false, EnvPointer::kNone};
        }
        if (e.op == "*") {
          const VarFacts base = Eval(operand);
          EnvAccessEvent(e, EnvAccess::kRead, base.env);
          return {base.taint, false, EnvPointer::kNone};
        }
        if (e.op == "++" || e.op == "--") {
          VarFacts v = Eval(operand);
          v.io_int = false;
          StoreTarget(operand, v);
          return v;
        }
        VarFacts v = Eval(operand);
        return {v.taint, false, EnvPointer::kNone};
      }
      case NodeKind::kBinaryOp: {
        const VarFacts lhs = Eval(*e.child(0));
        const VarFacts rhs = Eval(*e.child(1));
        if (e.op == ",") return rhs;
        VarFacts out = lhs.Join(rhs);
        out.io_int = false;
        if (e.op != "+" && e.op != "-") out.env = EnvPointer::kNone;
        return out;
      }
      case NodeKind::kCast: {
        VarFacts v = Eval(*e.child(0));
        v.io_int = false;
        if (!e.type.IsPointerLike()) v.env = EnvPointer::kNone;
        return v;
      }
      case NodeKind::kConditional: {
        Eval(*e.child(0));
        const VarFacts a = Eval(*e.child(1));
        const VarFacts b = Eval(*e.child(2));
        return a.Join(b);
      }
      case NodeKind::kInitList: {
        VarFacts out;
        for (const auto& child : e.children) out = out.Join(Eval(*child));
        out.io_int = false;
        out.env = EnvPointer::kNone;
        return out;
      }
      default:
        return {};
    }
  }

  const SymbolTable& symbols_;
  DataflowState& state_;
  FlowObserver* observer_;
};

}  // namespace

DataflowState TransferFunction::EntryState(const Cfg& cfg) const {
  DataflowState state;
  state.reachable = true;
  state.vars.assign(symbols_.size(), VarFacts{});
  state.errno_phase = ErrnoPhase::Indeterminate();
  if (cfg.definition) {
    for (const auto& child : cfg.definition->children) {
      if (child->kind != NodeKind::kParameter || !child->resolved_symbol) continue;
      if (child->resolved_symbol->is_argv) state.Var(*child->resolved_symbol).taint = Taint::kTainted;
    }
  }
  return state;
}

void TransferFunction::Apply(const CfgElement& element, DataflowState& state,
                             FlowObserver* observer) const {
  if (!state.reachable) return;
  Interpreter(symbols_, state, observer).Element(element);
}

const Symbol* TransferFunction::ValidatedVariable(const AstNode& condition) const {
  const AstNode& e = StripCasts(condition);
  if (e.kind != NodeKind::kBinaryOp || !IsRelational(e.op)) return nullptr;
  for (int side = 0; side < 2; ++side) {
    const AstNode& var_side = StripCasts(*e.child(side));
    const AstNode& const_side = *e.child(1 - side);
    if (var_side.kind != NodeKind::kIdentifierRef) continue;
    if (!IsTrackedVariable(var_side.resolved_symbol)) continue;
    if (FoldIntegerConstant(const_side, symbols_)) return var_side.resolved_symbol;
  }
  return nullptr;
}

void TransferFunction::ApplyEdge(const Cfg& cfg, const CfgEdge& edge,
                                 DataflowState& state) const {
  if (!state.reachable || !edge.branch) return;
  const BasicBlock& from = cfg.blocks[static_cast<size_t>(edge.from)];
  if (from.elements.empty() || from.elements.back().kind != CfgElement::Kind::kCondition) {
    return;
  }
  if (const Symbol* var = ValidatedVariable(*from.elements.back().node)) {
    VarFacts& facts = state.Var(*var);
    if (facts.taint == Taint::kTainted) facts.taint = Taint::kValidated;
  }
}

FlowResult Propagate(const Cfg& cfg, const TransferFunction& transfer) {
  const size_t n = cfg.blocks.size();
  FlowResult result;
  DataflowState bottom;
  bottom.vars.assign(transfer.symbols().size(), VarFacts{});
  result.block_in.assign(n, bottom);
  result.block_out.assign(n, bottom);
  result.before.assign(n, {});

  const std::vector<int> order = cfg.ReversePostOrder();
  std::vector<std::vector<const CfgEdge*>> preds(n);
  for (const CfgEdge& e : cfg.edges) preds[static_cast<size_t>(e.to)].push_back(&e);

  bool changed = true;
  while (changed) {
    changed = false;
    ++result.passes;
    for (int b : order) {
      const auto bi = static_cast<size_t>(b);
      DataflowState in = bottom;
      if (b == cfg.entry) {
        in = transfer.EntryState(cfg);
      } else {
        for (const CfgEdge* e : preds[bi]) {
          DataflowState along = result.block_out[static_cast<size_t>(e->from)];
          transfer.ApplyEdge(cfg, *e, along);
          in.JoinWith(along);
        }
      }
      DataflowState out = in;
      std::vector<DataflowState> before;
      before.reserve(cfg.blocks[bi].elements.size());
      for (const CfgElement& el : cfg.blocks[bi].elements) {
        before.push_back(out);
        transfer.Apply(el, out);
      }
      if (!(in == result.block_in[bi]) || !(out == result.block_out[bi])) changed = true;
      result.block_in[bi] = std::move(in);
      result.block_out[bi] = std::move(out);
      result.before[bi] = std::move(before);
    }
  }
  return result;
}

void Replay(const Cfg& cfg, const FlowResult& flow, const TransferFunction& transfer,
            FlowObserver& observer) {
  for (const BasicBlock& block : cfg.blocks) {
    DataflowState state = flow.block_in[static_cast<size_t>(block.id)];
    if (!state.reachable) continue;
    for (const CfgElement& el : block.elements) transfer.Apply(el, state, &observer);
  }
}

}  // namespace seclint
