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

#include "seclint/cli/cli.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "seclint/coverage/coverage.h"
#include "seclint/report/report.h"

#ifndef SECLINT_DATA_DIR
#define SECLINT_DATA_DIR "data"
#endif

namespace seclint::cli {

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot read file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> SplitList(std::string_view s) {
  std::vector<std::string> out;
  std::stringstream in{std::string(s)};
  std::string item;
  while (std::getline(in, item, ',')) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::optional<OutputFormat> ParseFormat(std::string_view s) {
  if (s == "text") return OutputFormat::kText;
  if (s == "json") return OutputFormat::kJson;
  return std::nullopt;
}

std::optional<FailOn> ParseFailOn(std::string_view s) {
  if (s == "any") return FailOn::kAny;
  if (s == "mandatory") return FailOn::kMandatory;
  if (s == "never") return FailOn::kNever;
  return std::nullopt;
}

bool Fails(const std::vector<Diagnostic>& diags, FailOn policy) {
  if (policy == FailOn::kNever) return false;
  return std::any_of(diags.begin(), diags.end(), [policy](const Diagnostic& d) {
    return !d.suppressed && (policy == FailOn::kAny ||
                             d.guideline->category == GuidelineCategory::kMandatory);
  });
}

}  // namespace

AnalysisOptions Config::ToAnalysisOptions() const {
  AnalysisOptions options;
  options.profile = profile;
  options.enabled = enabled;
  options.disabled = disabled;
  return options;
}

std::optional<std::string> ValidateConfig(const Config& config) {
  for (const auto* set : {&config.enabled, &config.disabled}) {
    for (const std::string& id : *set) {
      if (!FindGuideline(id)) return "unknown guideline id '" + id + "'";
    }
  }
  for (const std::string& id : config.enabled) {
    if (config.disabled.count(id)) return "guideline '" + id + "' is both enabled and disabled";
  }
  if (config.jobs < 1) return "--jobs must be at least 1";
  return std::nullopt;
}

void ApplyConfigFile(std::string_view text, Config& config) {
  std::stringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = Trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    auto fail = [line_no](const std::string& what) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + what);
    };
    if (eq == std::string::npos) fail("expected 'key = value'");
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    if (key == "profile") {
      const auto p = ParseProfile(value);
      if (!p) fail("bad profile '" + value + "'");
      config.profile = *p;
    } else if (key == "format") {
      const auto f = ParseFormat(value);
      if (!f) fail("bad format '" + value + "'");
      config.format = *f;
    } else if (key == "fail-on" || key == "fail_on") {
      const auto f = ParseFailOn(value);
      if (!f) fail("bad fail-on value '" + value + "'");
      config.fail_on = *f;
    } else if (key == "enable") {
      for (const std::string& id : SplitList(value)) config.enabled.insert(id);
    } else if (key == "disable") {
      for (const std::string& id : SplitList(value)) config.disabled.insert(id);
    } else if (key == "mapping") {
      config.mapping_file = value;
    } else if (key == "jobs") {
      try {
        config.jobs = std::stoi(value);
      } catch (const std::exception&) {
        fail("bad jobs value '" + value + "'");
      }
    } else {
      fail("unknown key '" + key + "'");
    }
  }
}

std::vector<std::string> DiscoverFiles(const std::vector<std::string>& inputs) {
  std::vector<std::string> files;
  for (const std::string& input : inputs) {
    const fs::path path(input);
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      for (const auto& entry : fs::recursive_directory_iterator(path)) {
        if (entry.is_regular_file() && entry.path().extension() == ".c") {
          files.push_back(entry.path().generic_string());
        }
      }
    } else if (fs::exists(path, ec)) {
      files.push_back(path.generic_string());
    } else {
      throw std::runtime_error(input + ": no such file or directory");
    }
  }
  std::sort(files.begin(), files.end());
  files.erase(std::unique(files.begin(), files.end()), files.end());
  return files;
}

std::vector<FileAnalysis> AnalyzeFiles(const std::vector<std::string>& files,
                                       const AnalysisOptions& options, int jobs) {
  std::vector<FileAnalysis> results(files.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < files.size(); i = next++) {
      results[i] = AnalyzeFile(files[i], options);
    }
  };
  const size_t threads = std::min<size_t>(static_cast<size_t>(std::max(jobs, 1)), files.size());
  if (threads <= 1) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return results;
}

int RunCheck(const std::vector<std::string>& inputs, const Config& config, std::ostream& out,
             std::ostream& err) {
  if (inputs.empty()) {
    err << "seclint check: no input files\n";
    return kExitUsage;
  }
  std::vector<std::string> files;
  try {
    files = DiscoverFiles(inputs);
  } catch (const std::runtime_error& e) {
    err << "seclint: " << e.what() << "\n";
    return kExitInput;
  }
  const std::vector<FileAnalysis> results =
      AnalyzeFiles(files, config.ToAnalysisOptions(), config.jobs);

  std::vector<Diagnostic> all;
  bool input_error = false;
  size_t analyzed = 0;
  for (const FileAnalysis& r : results) {
    if (r.error) {
      err << "seclint: " << *r.error << "\n";
      input_error = true;
      continue;
    }
    ++analyzed;
    all.insert(all.end(), r.diagnostics.begin(), r.diagnostics.end());
  }
  SortAndUnique(all);

  RunSummary summary = Summarize(all, analyzed);
  int code = kExitOk;
  if (input_error) {
    code = kExitInput;
    summary.exit_status = ExitStatus::kInputError;
  } else if (Fails(all, config.fail_on)) {
    code = kExitFindings;
    summary.exit_status = ExitStatus::kFindingsPresent;
  } else {
    summary.exit_status = ExitStatus::kClean;
  }
  out << (config.format == OutputFormat::kJson ? RenderJson(all, summary) : RenderText(all));
  return code;
}

int RunCoverage(const CoverageRequest& request, const Config& config, std::ostream& out,
                std::ostream& err) {
  using coverage::CoverageMatrix;
  using coverage::GapReport;
  using coverage::Ruleset;
  namespace cov = coverage;
  std::vector<Ruleset> rulesets;
  if (request.ruleset) {
    const auto r = cov::ParseRuleset(*request.ruleset);
    if (!r) {
      err << "seclint coverage: unknown ruleset '" << *request.ruleset << "'\n";
      return kExitUsage;
    }
    rulesets.push_back(*r);
  } else {
    rulesets = {cov::Ruleset::kTS17961, cov::Ruleset::kCertC2014, cov::Ruleset::kCertC2016};
  }
  std::optional<cov::Profile> gap_profile;
  if (request.profile) {
    gap_profile = cov::ParseProfile(*request.profile);
    if (!gap_profile) {
      err << "seclint coverage: unknown profile '" << *request.profile << "'\n";
      return kExitUsage;
    }
  }
  if (request.gaps && rulesets.size() != 1) {
    err << "seclint coverage: --gaps requires --ruleset\n";
    return kExitUsage;
  }

  try {
    const auto entries = cov::LoadMappingFile(config.mapping_file.value_or(DefaultMappingPath()));
    std::vector<CoverageMatrix> matrices;
    for (Ruleset r : rulesets) {
      for (cov::Profile p : cov::ApplicableProfiles(r)) matrices.push_back(cov::Aggregate(entries, r, p));
    }
    std::optional<GapReport> gaps;
    if (request.gaps) {
      gaps = cov::BuildGapReport(entries, rulesets[0], gap_profile.value_or(cov::Profile::kMC3Amd1));
    }
    if (config.format == OutputFormat::kJson) {
      out << RenderCoverageJson(matrices, gaps ? &*gaps : nullptr);
      return kExitOk;
    }
    // TS 17961 gets its own two-profile table; the CERT editions share one.
    std::vector<CoverageMatrix> ts;
    std::vector<CoverageMatrix> cert;
    for (const CoverageMatrix& m : matrices) (cov::IsCertRuleset(m.ruleset) ? cert : ts).push_back(m);
    if (!ts.empty()) out << cov::RenderMatrixTable(ts);
    if (!ts.empty() && !cert.empty()) out << "\n";
    if (!cert.empty()) out << cov::RenderMatrixTable(cert);
    if (gaps) out << "\n" << cov::RenderGapReport(*gaps);
  } catch (const cov::CoverageError& e) {
    err << "seclint coverage: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

CorpusAnnotations ParseCorpusAnnotations(std::string_view text) {
  static const std::regex kExpect(R"(EXPECT(-SUPPRESSED)?:\s*([A-Za-z0-9_.]+))");
  static const std::regex kProfile(R"(//\s*PROFILE:\s*(\w+))");
  CorpusAnnotations a;
  std::stringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (std::sregex_iterator it(line.begin(), line.end(), kExpect), end; it != end; ++it) {
      auto& into = (*it)[1].matched ? a.expected_suppressed : a.expected;
      into.emplace_back((*it)[2].str(), line_no);
    }
    std::smatch m;
    if (std::regex_search(line, m, kProfile)) a.profile = ParseProfile(m[1].str());
    if (line.find("EXPECT-ERROR") != std::string::npos) a.expect_error = true;
  }
  std::sort(a.expected.begin(), a.expected.end());
  std::sort(a.expected_suppressed.begin(), a.expected_suppressed.end());
  return a;
}

namespace {

using Pairs = std::vector<std::pair<std::string, int>>;

void Diff(const Pairs& expected, const Pairs& actual, const char* suffix,
          std::vector<std::string>& lines) {
  Pairs missing;
  Pairs unexpected;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::back_inserter(missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::back_inserter(unexpected));
  for (const auto& [id, line] : missing) {
    lines.push_back("  missing" + std::string(suffix) + ": " + id + " at line " +
                    std::to_string(line));
  }
  for (const auto& [id, line] : unexpected) {
    lines.push_back("  unexpected" + std::string(suffix) + ": " + id + " at line " +
                    std::to_string(line));
  }
}

}  // namespace

int RunCorpus(const std::vector<std::string>& inputs, const Config& config, std::ostream& out,
              std::ostream& err) {
  if (inputs.empty()) {
    err << "seclint corpus: no corpus directory\n";
    return kExitUsage;
  }
  std::vector<std::string> files;
  try {
    files = DiscoverFiles(inputs);
  } catch (const std::runtime_error& e) {
    err << "seclint: " << e.what() << "\n";
    return kExitInput;
  }
  std::vector<CorpusAnnotations> annotations(files.size());
  for (size_t i = 0; i < files.size(); ++i) {
    try {
      annotations[i] = ParseCorpusAnnotations(ReadText(files[i]));
    } catch (const std::runtime_error& e) {
      err << "seclint: " << e.what() << "\n";
      return kExitInput;
    }
  }
  // Group by effective profile so each group can run in parallel.
  std::vector<FileAnalysis> results(files.size());
  for (Profile p : {Profile::kSecurity, Profile::kRestrictive, Profile::kBoth}) {
    std::vector<std::string> group;
    std::vector<size_t> index;
    for (size_t i = 0; i < files.size(); ++i) {
      if (annotations[i].profile.value_or(config.profile) == p) {
        group.push_back(files[i]);
        index.push_back(i);
      }
    }
    AnalysisOptions options = config.ToAnalysisOptions();
    options.profile = p;
    auto group_results = AnalyzeFiles(group, options, config.jobs);
    for (size_t k = 0; k < index.size(); ++k) results[index[k]] = std::move(group_results[k]);
  }

  size_t passed = 0;
  for (size_t i = 0; i < files.size(); ++i) {
    const CorpusAnnotations& a = annotations[i];
    const FileAnalysis& r = results[i];
    std::vector<std::string> diff;
    if (r.error) {
      if (!a.expect_error) diff.push_back("  error: " + *r.error);
    } else if (a.expect_error) {
      diff.push_back("  missing: expected an input error");
    }
    Pairs actual;
    Pairs actual_suppressed;
    for (const Diagnostic& d : r.diagnostics) {
      (d.suppressed ? actual_suppressed : actual)
          .emplace_back(std::string(d.guideline->id), d.loc.line);
    }
    std::sort(actual.begin(), actual.end());
    std::sort(actual_suppressed.begin(), actual_suppressed.end());
    Diff(a.expected, actual, "", diff);
    Diff(a.expected_suppressed, actual_suppressed, " suppressed", diff);
    if (diff.empty()) {
      ++passed;
      out << "PASS " << files[i] << "\n";
    } else {
      out << "FAIL " << files[i] << "\n";
      for (const std::string& line : diff) out << line << "\n";
    }
  }
  out << passed << "/" << files.size() << " PASS\n";
  return passed == files.size() ? kExitOk : kExitFindings;
}

std::string DefaultMappingPath() { return std::string(SECLINT_DATA_DIR) + "/mappings.txt"; }

int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"seclint: security guideline checker for C"};
  app.name("seclint");
  app.require_subcommand(1);

  std::string config_path;
  std::string profile;
  std::string format;
  std::vector<std::string> enable;
  std::vector<std::string> disable;
  std::string mapping;
  std::string fail_on;
  int jobs = 1;
  std::vector<std::string> inputs;
  CoverageRequest coverage_request;
  std::string ruleset;
  std::string coverage_profile;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key = value configuration file");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--mapping", mapping, "coverage mapping file");
  };
  auto add_analysis = [&](CLI::App* sub) {
    sub->add_option("--profile", profile, "security, restrictive or both")
        ->check(CLI::IsMember({"security", "restrictive", "both"}));
    sub->add_option("--enable", enable, "report only these guideline ids")->delimiter(',');
    sub->add_option("--disable", disable, "do not report these guideline ids")->delimiter(',');
    sub->add_option("--fail-on", fail_on, "any, mandatory or never")
        ->check(CLI::IsMember({"any", "mandatory", "never"}));
    sub->add_option("--jobs,-j", jobs, "parallel analysis threads")->check(CLI::PositiveNumber);
  };

  CLI::App* check = app.add_subcommand("check", "analyze C files");
  add_common(check);
  add_analysis(check);
  check->add_option("inputs", inputs, "files or directories")->required();

  CLI::App* cov = app.add_subcommand("coverage", "print coverage matrices");
  add_common(cov);
  cov->add_option("--ruleset", ruleset, "ts17961, certc2014 or certc2016")
      ->check(CLI::IsMember({"ts17961", "certc2014", "certc2016"}));
  cov->add_option("--profile", coverage_profile, "mc3 or mc3a1 (for --gaps)")
      ->check(CLI::IsMember({"mc3", "mc3a1"}));
  cov->add_flag("--gaps", coverage_request.gaps, "list per-rule classifications");

  CLI::App* corpus = app.add_subcommand("corpus", "run annotated corpus files");
  add_common(corpus);
  add_analysis(corpus);
  corpus->add_option("inputs", inputs, "corpus directories or files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  Config config;
  if (!config_path.empty()) {
    try {
      ApplyConfigFile(ReadText(config_path), config);
    } catch (const std::invalid_argument& e) {
      err << "seclint: " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::runtime_error& e) {
      err << "seclint: " << e.what() << "\n";
      return kExitInput;
    }
  }
  auto given = [sub](const char* name) {
    try {
      return sub->get_option(name)->count() > 0;
    } catch (const CLI::OptionNotFound&) {
      return false;
    }
  };
  if (given("--profile") && sub != cov) config.profile = *ParseProfile(profile);
  if (given("--format")) config.format = *ParseFormat(format);
  if (given("--fail-on")) config.fail_on = *ParseFailOn(fail_on);
  if (given("--mapping")) config.mapping_file = mapping;
  if (given("--jobs")) config.jobs = jobs;
  if (given("--enable")) config.enabled = {enable.begin(), enable.end()};
  if (given("--disable")) config.disabled = {disable.begin(), disable.end()};
  if (const auto problem = ValidateConfig(config)) {
    err << "seclint: " << *problem << "\n";
    return kExitUsage;
  }

  if (sub == check) return RunCheck(inputs, config, out, err);
  if (sub == corpus) return RunCorpus(inputs, config, out, err);
  if (!ruleset.empty()) coverage_request.ruleset = ruleset;
  if (!coverage_profile.empty()) coverage_request.profile = coverage_profile;
  return RunCoverage(coverage_request, config, out, err);
}

}  // namespace seclint::cli
