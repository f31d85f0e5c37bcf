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

#include "seclint/analyzer.h"

#include <fstream>
#include <sstream>

#include "seclint/checkers/deviation.h"
#include "seclint/frontend/parser.h"

namespace seclint {

namespace {

void Append(std::vector<Diagnostic>& to, std::vector<Diagnostic> from) {
  for (Diagnostic& d : from) to.push_back(std::move(d));
}

}  // namespace

FileAnalysis AnalyzeSource(std::string_view text, const std::string& path,
                           const AnalysisOptions& options) {
  FileAnalysis result;
  result.path = path;
  try {
    TranslationUnit tu = ParseSource(text, path);
    Resolution res = Resolve(tu);
    result.notes = std::move(res.notes);
    const SymbolTable& symbols = res.symbols;

    TransferFunction transfer(symbols);
    std::vector<FlowEvents> events;
    for (const auto& top : tu.top_level) {
      if (top->kind != NodeKind::kFunctionDef) continue;
      events.push_back(CollectFlowEvents(AnalyzeFunctionFlow(*top, transfer), transfer));
    }

    std::vector<Diagnostic> all;
    for (const FlowEvents& fe : events) {
      Append(all, CheckExternalDataValidation(fe));
      Append(all, CheckEnvFunctions(fe));
      Append(all, CheckErrnoProtocol(fe));
    }
    Append(all, CheckSizeofArrayParam(tu));
    Append(all, CheckCtypeArgs(tu, symbols));
    Append(all, CheckMemCompare(tu, symbols));
    Append(all, CheckStringHandling(tu, symbols, events));
    Append(all, CheckEofHandling(tu, symbols));
    Append(all, CheckBannedConstructs(tu, options.profile));

    for (Diagnostic& d : all) {
      if (d.guideline && ProfileEnables(options.profile, *d.guideline) &&
          !options.disabled.count(d.guideline->id) &&
          (options.enabled.empty() || options.enabled.count(d.guideline->id))) {
        result.diagnostics.push_back(std::move(d));
      }
    }
    SortAndUnique(result.diagnostics);
    ApplyDeviations(ParseDeviations(text), result.diagnostics);
  } catch (const FrontendError& e) {
    result.diagnostics.clear();
    result.error = e.what();
  }
  return result;
}

FileAnalysis AnalyzeFile(const std::string& path, const AnalysisOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    FileAnalysis result;
    result.path = path;
    result.error = path + ": cannot read file";
    return result;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return AnalyzeSource(buffer.str(), path, options);
}

}  // namespace seclint
