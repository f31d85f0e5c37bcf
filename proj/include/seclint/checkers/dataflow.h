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

#ifndef SECLINT_CHECKERS_DATAFLOW_H_
#define SECLINT_CHECKERS_DATAFLOW_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "seclint/frontend/ast.h"
#include "seclint/sema/cfg.h"
#include "seclint/sema/symbols.h"

namespace seclint {

// Ordered so that join is max: a value validated on one path and tainted on
// another is tainted.
enum class Taint : std::uint8_t { kUntainted = 0, kValidated = 1, kTainted = 2 };

// Environment-pointer provenance. kStale means a later environment-function
// call may have overwritten the object (its epoch is older than the current
// one).
enum class EnvPointer : std::uint8_t { kNone = 0, kCurrent = 1, kStale = 2 };

const char* TaintName(Taint t);

struct VarFacts {
  Taint taint = Taint::kUntainted;
  bool io_int = false;
  EnvPointer env = EnvPointer::kNone;

  bool operator==(const VarFacts&) const = default;
  VarFacts Join(const VarFacts& other) const;
};

// Set of possible errno phases; join is union.
struct ErrnoPhase {
  bool indeterminate = false;
  bool zeroed = false;
  bool tested = false;
  // CallMade, keyed by call node id.
  std::map<int, const AstNode*> calls;

  static ErrnoPhase Indeterminate() { return {true, false, false, {}}; }
  static ErrnoPhase Zeroed() { return {false, true, false, {}}; }
  static ErrnoPhase Tested() { return {false, false, true, {}}; }
  static ErrnoPhase CallMade(const AstNode& call) {
    ErrnoPhase p;
    p.calls.emplace(call.id, &call);
    return p;
  }

  bool OnlyZeroed() const { return zeroed && !indeterminate && !tested && calls.empty(); }
  bool operator==(const ErrnoPhase&) const = default;
  void JoinWith(const ErrnoPhase& other);
  std::string ToString() const;
};

struct DataflowState {
  bool reachable = false;
  std::vector<VarFacts> vars;  // indexed by Symbol::id
  ErrnoPhase errno_phase;

  bool operator==(const DataflowState&) const = default;
  void JoinWith(const DataflowState& other);
  const VarFacts& Var(const Symbol& s) const { return vars[static_cast<size_t>(s.id)]; }
  VarFacts& Var(const Symbol& s) { return vars[static_cast<size_t>(s.id)]; }
};

enum class SinkKind { kArrayIndex, kSizeArgument, kLoopBound, kSystemArgument };

const char* SinkKindName(SinkKind kind);

enum class EnvAccess { kRead, kWrite };

// Events raised while transfer functions run. Checkers replay blocks from
// the fixpoint states with an observer attached.
class FlowObserver {
 public:
  virtual ~FlowObserver() = default;
  // `sink` is the expression reaching the sink; `site` the construct
  // (subscript, call, loop condition) that owns it.
  virtual void OnSink(const AstNode& /*sink*/, const AstNode& /*site*/, SinkKind /*kind*/,
                      Taint /*taint*/) {}
  virtual void OnErrnoSettingCall(const AstNode& /*call*/, const ErrnoPhase& /*before*/) {}
  virtual void OnErrnoRead(const AstNode& /*ref*/, const ErrnoPhase& /*before*/) {}
  virtual void OnEnvAccess(const AstNode& /*site*/, EnvAccess /*access*/,
                           EnvPointer /*status*/) {}
};

class TransferFunction {
 public:
  explicit TransferFunction(const SymbolTable& symbols) : symbols_(symbols) {}

  // State at function entry: main's argv tainted, errno indeterminate.
  DataflowState EntryState(const Cfg& cfg) const;

  void Apply(const CfgElement& element, DataflowState& state,
             FlowObserver* observer = nullptr) const;

  // Validation on branch edges: a relational comparison of a variable
  // against a constant validates it on both outgoing edges.
  void ApplyEdge(const Cfg& cfg, const CfgEdge& edge, DataflowState& state) const;

  // The variable validated when `condition` is used as a branch, or nullptr.
  const Symbol* ValidatedVariable(const AstNode& condition) const;

  const SymbolTable& symbols() const { return symbols_; }

 private:
  const SymbolTable& symbols_;
};

struct FlowResult {
  std::vector<DataflowState> block_in;
  std::vector<DataflowState> block_out;
  // before[b][i] is the state before element i of block b.
  std::vector<std::vector<DataflowState>> before;
  int passes = 0;
};

// Forward fixpoint with pointwise join at merges, visiting blocks in
// reverse post-order each pass.
FlowResult Propagate(const Cfg& cfg, const TransferFunction& transfer);

// Runs every reachable block once from its fixpoint in-state with the
// observer attached.
void Replay(const Cfg& cfg, const FlowResult& flow, const TransferFunction& transfer,
            FlowObserver& observer);

}  // namespace seclint

#endif  // SECLINT_CHECKERS_DATAFLOW_H_
