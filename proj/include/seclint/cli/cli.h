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

#ifndef SECLINT_CLI_CLI_H_
#define SECLINT_CLI_CLI_H_

#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "seclint/analyzer.h"
#include "seclint/checkers/checkers.h"

namespace seclint::cli {

enum class OutputFormat { kText, kJson };
enum class FailOn { kAny, kMandatory, kNever };

struct Config {
  Profile profile = Profile::kSecurity;
  std::set<std::string, std::less<>> enabled;  // empty: all
  std::set<std::string, std::less<>> disabled;
  OutputFormat format = OutputFormat::kText;
  std::optional<std::string> mapping_file;
  FailOn fail_on = FailOn::kAny;
  int jobs = 1;

  AnalysisOptions ToAnalysisOptions() const;
};

// Returns a message when the config violates its invariants (unknown ids,
// overlap between enabled and disabled, jobs < 1).
std::optional<std::string> ValidateConfig(const Config& config);

// Applies `key = value` lines; unknown keys and bad values throw
// std::invalid_argument.
void ApplyConfigFile(std::string_view text, Config& config);

// Expands directories recursively to their .c files; the result is sorted.
// Throws std::runtime_error naming a missing path.
std::vector<std::string> DiscoverFiles(const std::vector<std::string>& inputs);

// Analyzes files on up to `jobs` threads; results are in input order.
std::vector<FileAnalysis> AnalyzeFiles(const std::vector<std::string>& files,
                                       const AnalysisOptions& options, int jobs);

int RunCheck(const std::vector<std::string>& inputs, const Config& config, std::ostream& out,
             std::ostream& err);

struct CoverageRequest {
  std::optional<std::string> ruleset;  // all when unset
  std::optional<std::string> profile;  // for --gaps; default mc3a1
  bool gaps = false;
};

int RunCoverage(const CoverageRequest& request, const Config& config, std::ostream& out,
                std::ostream& err);

// Annotations of one corpus file.
struct CorpusAnnotations {
  // (guideline id, line), sorted.
  std::vector<std::pair<std::string, int>> expected;
  std::vector<std::pair<std::string, int>> expected_suppressed;
  std::optional<Profile> profile;
  bool expect_error = false;
};

CorpusAnnotations ParseCorpusAnnotations(std::string_view text);

int RunCorpus(const std::vector<std::string>& inputs, const Config& config, std::ostream& out,
              std::ostream& err);

// Entry point: argv[1] is the subcommand.
int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string DefaultMappingPath();

}  // namespace seclint::cli

#endif  // SECLINT_CLI_CLI_H_
