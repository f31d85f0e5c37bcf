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

#ifndef SECLINT_CHECKERS_CHECKERS_H_
#define SECLINT_CHECKERS_CHECKERS_H_

#include <optional>
#include <string_view>
#include <vector>

#include "seclint/checkers/dataflow.h"
#include "seclint/checkers/diagnostic.h"
#include "seclint/frontend/ast.h"
#include "seclint/sema/cfg.h"
#include "seclint/sema/symbols.h"

namespace seclint {

// security: the Amendment 1 guidelines. restrictive: the four bans only.
// both: the union.
enum class Profile { kSecurity, kRestrictive, kBoth };

const char* ProfileName(Profile profile);
std::optional<Profile> ParseProfile(std::string_view name);
bool ProfileEnables(Profile profile, const Guideline& guideline);

// One function body with its fixpoint.
struct FunctionFlow {
  Cfg cfg;
  FlowResult flow;
};

// Dataflow events of one function, collected by replaying the fixpoint.
struct FlowEvents {
  struct Sink {
    const AstNode* sink;
    const AstNode* site;
    SinkKind kind;
    Taint taint;
  };
  struct ErrnoCall {
    const AstNode* call;
    ErrnoPhase before;
  };
  struct ErrnoRead {
    const AstNode* ref;
    ErrnoPhase before;
  };
  struct Env {
    const AstNode* site;
    EnvAccess access;
    EnvPointer status;
  };
  std::vector<Sink> sinks;
  std::vector<ErrnoCall> errno_calls;
  std::vector<ErrnoRead> errno_reads;
  std::vector<Env> env;
  ErrnoPhase exit_phase;
  bool exit_reachable = false;
};

FunctionFlow AnalyzeFunctionFlow(const AstNode& function_def, const TransferFunction& transfer);
FlowEvents CollectFlowEvents(const FunctionFlow& fn, const TransferFunction& transfer);

std::vector<Diagnostic> CheckExternalDataValidation(const FlowEvents& events);
std::vector<Diagnostic> CheckSizeofArrayParam(const TranslationUnit& tu);
std::vector<Diagnostic> CheckCtypeArgs(const TranslationUnit& tu, const SymbolTable& symbols);
std::vector<Diagnostic> CheckMemCompare(const TranslationUnit& tu, const SymbolTable& symbols);
std::vector<Diagnostic> CheckEnvFunctions(const FlowEvents& events);
// Sub-rule (b) needs taint of the size argument, hence the events.
std::vector<Diagnostic> CheckStringHandling(const TranslationUnit& tu,
                                            const SymbolTable& symbols,
                                            const std::vector<FlowEvents>& events);
std::vector<Diagnostic> CheckEofHandling(const TranslationUnit& tu, const SymbolTable& symbols);
std::vector<Diagnostic> CheckErrnoProtocol(const FlowEvents& events);
std::vector<Diagnostic> CheckBannedConstructs(const TranslationUnit& tu, Profile profile);

}  // namespace seclint

#endif  // SECLINT_CHECKERS_CHECKERS_H_
