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

#include "seclint/checkers/checkers.h"

#include <set>
#include <string>
#include <utility>

#include "seclint/sema/essential_type.h"
#include "seclint/sema/library.h"

namespace seclint {

namespace ids = guideline_ids;

const char* ProfileName(Profile profile) {
  switch (profile) {
    case Profile::kSecurity: return "security";
    case Profile::kRestrictive: return "restrictive";
    case Profile::kBoth: return "both";
  }
  return "?";
}

std::optional<Profile> ParseProfile(std::string_view name) {
  if (name == "security") return Profile::kSecurity;
  if (name == "restrictive") return Profile::kRestrictive;
  if (name == "both") return Profile::kBoth;
  return std::nullopt;
}

bool ProfileEnables(Profile profile, const Guideline& guideline) {
  switch (profile) {
    case Profile::kSecurity: return !guideline.is_ban();
    case Profile::kRestrictive: return guideline.is_ban();
    case Profile::kBoth: return true;
  }
  return false;
}

namespace {

Diagnostic Make(std::string_view id, const SourceLocation& loc, std::string message) {
  Diagnostic d;
  d.guideline = FindGuideline(id);
  d.loc = loc;
  d.message = std::move(message);
  return d;
}

std::string Quote(const std::string& s) { return "'" + s + "'"; }

void ForEachLibraryCall(const TranslationUnit& tu,
                        const std::function<void(const AstNode&, const LibraryFunctionInfo&)>& fn) {
  Walk(tu, [&fn](const AstNode& n) {
    if (n.kind == NodeKind::kCall && n.library) fn(n, *n.library);
  });
}

bool IsCharCategory(const TypeDesc& t) {
  return t.category() == TypeCategory::kPlainChar || t.category() == TypeCategory::kSignedChar;
}

// Plain or signed char array, pointer or string literal.
bool IsCharacterString(const AstNode& arg, const SymbolTable& symbols) {
  const AstNode& e = StripCasts(arg);
  if (e.kind == NodeKind::kLiteral && e.literal_kind == LiteralKind::kString) return true;
  const TypeDesc t = ComputeEssentialType(e, symbols).type;
  return t.HasElement() && IsCharCategory(t.element());
}

bool DesignatesStruct(const AstNode& arg, const SymbolTable& symbols) {
  const TypeDesc t = ComputeEssentialType(StripCasts(arg), symbols).type;
  if (t.category() == TypeCategory::kStruct) return true;
  return t.HasElement() && t.element().category() == TypeCategory::kStruct;
}

class EventCollector : public FlowObserver {
 public:
  explicit EventCollector(FlowEvents& events) : events_(events) {}
  void OnSink(const AstNode& sink, const AstNode& site, SinkKind kind, Taint taint) override {
    events_.sinks.push_back({&sink, &site, kind, taint});
  }
  void OnErrnoSettingCall(const AstNode& call, const ErrnoPhase& before) override {
    events_.errno_calls.push_back({&call, before});
  }
  void OnErrnoRead(const AstNode& ref, const ErrnoPhase& before) override {
    events_.errno_reads.push_back({&ref, before});
  }
  void OnEnvAccess(const AstNode& site, EnvAccess access, EnvPointer status) override {
    events_.env.push_back({&site, access, status});
  }

 private:
  FlowEvents& events_;
};

}  // namespace

FunctionFlow AnalyzeFunctionFlow(const AstNode& function_def, const TransferFunction& transfer) {
  FunctionFlow fn{BuildCfg(function_def), {}};
  fn.flow = Propagate(fn.cfg, transfer);
  return fn;
}

FlowEvents CollectFlowEvents(const FunctionFlow& fn, const TransferFunction& transfer) {
  FlowEvents events;
  EventCollector collector(events);
  Replay(fn.cfg, fn.flow, transfer, collector);
  const DataflowState& at_exit = fn.flow.block_in[static_cast<size_t>(fn.cfg.exit)];
  events.exit_reachable = at_exit.reachable;
  if (at_exit.reachable) events.exit_phase = at_exit.errno_phase;
  return events;
}

std::vector<Diagnostic> CheckExternalDataValidation(const FlowEvents& events) {
  std::vector<Diagnostic> out;
  for (const auto& s : events.sinks) {
    if (s.taint != Taint::kTainted) continue;
    const AstNode& at = s.kind == SinkKind::kLoopBound ? *s.sink : *s.site;
    out.push_back(Make(ids::kExternalData, at.loc,
                       std::string("unvalidated external data used as ") +
                           SinkKindName(s.kind)));
  }
  return out;
}

std::vector<Diagnostic> CheckSizeofArrayParam(const TranslationUnit& tu) {
  std::vector<Diagnostic> out;
  Walk(tu, [&out](const AstNode& n) {
    if (n.kind != NodeKind::kSizeofExpr || n.children.empty()) return;
    const AstNode& operand = StripCasts(*n.child(0));
    if (operand.kind != NodeKind::kIdentifierRef || !operand.resolved_symbol) return;
    if (!operand.resolved_symbol->is_array_declared_parameter) return;
    out.push_back(Make(ids::kSizeofArrayParam, n.loc,
                       "sizeof applied to array-declared parameter " + Quote(operand.text) +
                           " yields the pointer size"));
  });
  return out;
}

std::vector<Diagnostic> CheckCtypeArgs(const TranslationUnit& tu, const SymbolTable& symbols) {
  std::vector<Diagnostic> out;
  ForEachLibraryCall(tu, [&](const AstNode& call, const LibraryFunctionInfo& lib) {
    if (!lib.Has(LibraryFamily::kCtypeClassify) || call.size() < 2) return;
    const EssentialType et = ComputeEssentialType(*call.child(1), symbols);
    if (!IsCharCategory(et.type) || et.io_int) return;
    out.push_back(Make(ids::kCtypeArg, call.loc,
                       "argument to " + std::string(lib.name) + " has type " +
                           et.type.ToString() + " and may be negative"));
  });
  return out;
}

std::vector<Diagnostic> CheckMemCompare(const TranslationUnit& tu, const SymbolTable& symbols) {
  std::vector<Diagnostic> out;
  ForEachLibraryCall(tu, [&](const AstNode& call, const LibraryFunctionInfo& lib) {
    if (!lib.Has(LibraryFamily::kMemCompareCopy)) return;
    const size_t n_args = call.size() - 1;
    const std::string name(lib.name);
    if (name == "memcmp" && n_args >= 2) {
      const AstNode& a = *call.child(1);
      const AstNode& b = *call.child(2);
      if (DesignatesStruct(a, symbols) || DesignatesStruct(b, symbols)) {
        out.push_back(Make(ids::kMemcmpStruct, call.loc,
                           "memcmp compares structure objects including padding"));
      }
      if (IsCharacterString(a, symbols) && IsCharacterString(b, symbols)) {
        out.push_back(Make(ids::kMemcmpString, call.loc,
                           "memcmp compares character strings past their terminator"));
      }
    }
    const auto size_param = lib.SizeParam();
    if (!size_param || *size_param >= n_args) return;
    const auto size = FoldIntegerConstant(*call.child(*size_param + 1), symbols);
    if (!size || *size < 0) return;
    for (size_t i = 0; i < n_args; ++i) {
      if (lib.RoleOf(i) != ParamRole::kBuffer) continue;
      const auto bytes = BufferByteSize(*call.child(i + 1), symbols);
      if (bytes && static_cast<std::uint64_t>(*size) > *bytes) {
        out.push_back(Make(ids::kMemSizeExceeds, call.loc,
                           name + " size " + std::to_string(*size) + " exceeds the " +
                               std::to_string(*bytes) + "-byte buffer argument " +
                               std::to_string(i + 1)));
        break;
      }
    }
  });
  return out;
}

std::vector<Diagnostic> CheckEnvFunctions(const FlowEvents& events) {
  std::vector<Diagnostic> out;
  for (const auto& e : events.env) {
    if (e.access == EnvAccess::kWrite && e.status != EnvPointer::kNone) {
      out.push_back(Make(ids::kEnvWrite, e.site->loc,
                         "write through a pointer returned by an environment function"));
    } else if (e.access == EnvAccess::kRead && e.status == EnvPointer::kStale) {
      out.push_back(Make(ids::kEnvStale, e.site->loc,
                         "pointer from an environment function used after a later call "
                         "may have overwritten it"));
    }
  }
  return out;
}

std::vector<Diagnostic> CheckStringHandling(const TranslationUnit& tu,
                                            const SymbolTable& symbols,
                                            const std::vector<FlowEvents>& events) {
  std::set<const AstNode*> tainted_size_calls;
  for (const FlowEvents& fe : events) {
    for (const auto& s : fe.sinks) {
      if (s.kind == SinkKind::kSizeArgument && s.taint == Taint::kTainted) {
        tainted_size_calls.insert(s.site);
      }
    }
  }
  std::vector<Diagnostic> out;
  ForEachLibraryCall(tu, [&](const AstNode& call, const LibraryFunctionInfo& lib) {
    const std::string name(lib.name);
    if (lib.Has(LibraryFamily::kStringUnbounded)) {
      out.push_back(Make(ids::kStringUnbounded, call.loc,
                         name + " copies without a bound on the destination size"));
      return;
    }
    if (!lib.Has(LibraryFamily::kStringBounded)) return;
    if (tainted_size_calls.count(&call)) {
      out.push_back(Make(ids::kStringBound, call.loc,
                         name + " bound is derived from unvalidated external data"));
      return;
    }
    const auto size_param = lib.SizeParam();
    const size_t n_args = call.size() - 1;
    if (!size_param || *size_param >= n_args || n_args == 0) return;
    const auto size = FoldIntegerConstant(*call.child(*size_param + 1), symbols);
    const auto bytes = BufferByteSize(*call.child(1), symbols);
    if (size && bytes && *size >= 0 && static_cast<std::uint64_t>(*size) > *bytes) {
      out.push_back(Make(ids::kStringBound, call.loc,
                         name + " bound " + std::to_string(*size) + " exceeds the " +
                             std::to_string(*bytes) + "-byte destination"));
    }
  });
  return out;
}

std::vector<Diagnostic> CheckEofHandling(const TranslationUnit& tu, const SymbolTable& symbols) {
  static const std::set<std::string> kComparisons = {"==", "!=", "<", "<=", ">", ">="};
  std::vector<Diagnostic> out;
  Walk(tu, [&](const AstNode& n) {
    if (n.kind != NodeKind::kBinaryOp || !kComparisons.count(n.op)) return;
    for (int side = 0; side < 2; ++side) {
      const AstNode& eof = StripCasts(*n.child(side));
      if (eof.from_standard_macro != StandardMacro::kEOF) continue;
      const AstNode& other = *n.child(1 - side);
      const TypeDesc t = ComputeEssentialType(other, symbols).type;
      if (!t.IsCharacter()) continue;
      out.push_back(Make(ids::kEofCompare, n.loc,
                         "EOF compared with a value of type " + t.ToString() +
                             " after conversion from the stdio result"));
      return;
    }
  });
  return out;
}

std::vector<Diagnostic> CheckErrnoProtocol(const FlowEvents& events) {
  std::vector<Diagnostic> out;
  auto unchecked = [&out](const AstNode& call, const SourceLocation* overwritten_by) {
    Diagnostic d = Make(ids::kErrnoUnchecked, call.loc,
                        "errno set by " + Quote(call.child(0)->text) + " is never tested");
    if (overwritten_by) d.evidence.push_back(*overwritten_by);
    out.push_back(std::move(d));
  };
  for (const auto& c : events.errno_calls) {
    if (!c.before.OnlyZeroed()) {
      out.push_back(Make(ids::kErrnoNotZeroed, c.call->loc,
                         "errno is not set to zero before calling " +
                             Quote(c.call->child(0)->text)));
    }
    for (const auto& [id, earlier] : c.before.calls) unchecked(*earlier, &c.call->loc);
  }
  if (events.exit_reachable) {
    for (const auto& [id, earlier] : events.exit_phase.calls) unchecked(*earlier, nullptr);
  }
  for (const auto& r : events.errno_reads) {
    if (r.before.indeterminate || r.before.zeroed) {
      out.push_back(Make(ids::kErrnoSpuriousTest, r.ref->loc,
                         "errno tested without a preceding errno-setting call"));
    }
  }
  return out;
}

std::vector<Diagnostic> CheckBannedConstructs(const TranslationUnit& tu, Profile profile) {
  std::vector<Diagnostic> out;
  if (profile == Profile::kSecurity) return out;
  ForEachLibraryCall(tu, [&out](const AstNode& call, const LibraryFunctionInfo& lib) {
    const std::string name(lib.name);
    if (lib.Has(LibraryFamily::kMemAlloc)) {
      out.push_back(Make(ids::kBanMemAlloc, call.loc, "dynamic memory function " + Quote(name)));
    }
    if (lib.Has(LibraryFamily::kSignalApi)) {
      out.push_back(Make(ids::kBanSignal, call.loc, "signal handling function " + Quote(name)));
    }
    if (lib.header == "stdio.h") {
      out.push_back(Make(ids::kBanStdio, call.loc, "input/output function " + Quote(name)));
    }
    if (name == "getenv") {
      out.push_back(Make(ids::kBanGetenv, call.loc, "environment function 'getenv'"));
    }
  });
  return out;
}

}  // namespace seclint
