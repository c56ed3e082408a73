// Copyright 2026 The respmod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every subcommand is a thin wrapper over the library;
// artifacts go to stdout (or the file named by -o), diagnostics to stderr.
//
// Exit status: 0 success, 1 findings or inconsistencies at or above the fail
// level (check: a critical diagnostic), 2 usage, parse or resolution error.

#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "respmod/analysis.hpp"
#include "respmod/build.hpp"
#include "respmod/diff.hpp"
#include "respmod/elicitation.hpp"
#include "respmod/hazards.hpp"
#include "respmod/parser.hpp"
#include "respmod/printer.hpp"
#include "respmod/reporting.hpp"
#include "respmod/validate.hpp"

namespace respmod::cli {

enum ExitStatus : int { kSuccess = 0, kFindings = 1, kError = 2 };

namespace detail {

inline std::string read_file(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

inline Model load_model(const std::string& path, std::istream& in) {
  return build_model(parse_model(read_file(path, in), path));
}

inline const std::map<std::string, Severity>& severity_map() {
  static const std::map<std::string, Severity> m = {{"none", Severity::none},
                                                    {"low", Severity::low},
                                                    {"medium", Severity::medium},
                                                    {"high", Severity::high},
                                                    {"critical", Severity::critical}};
  return m;
}

}  // namespace detail

/// Runs one command line (`args[0]` is the program name).
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Responsibility modelling toolkit: check, analyse and report on .resp models", "respmod"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string file, second, responsibility, output, format = "text", which = "both";
  std::string fail_level = "medium", threshold = "medium";
  std::size_t load_threshold = kDefaultLoadThreshold;
  bool strict = false, report = false;

  const std::vector<std::string> levels = {"none", "low", "medium", "high", "critical"};
  auto add_model = [&](CLI::App* sub, const char* name = "FILE") {
    sub->add_option(name, file, "Model file (.resp), or - for stdin")->required();
  };
  auto add_responsibility = [&](CLI::App* sub) {
    sub->add_option("--responsibility,-r", responsibility, "Responsibility name")->required();
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", output, "Write to PATH instead of stdout"); };

  auto* check = app.add_subcommand("check", "Parse, resolve and validate a model");
  add_model(check);
  check->add_flag("--strict", strict, "Also report implicit declarations and missing channels");

  auto* analyze_cmd = app.add_subcommand("analyze", "Report responsibility vulnerabilities");
  add_model(analyze_cmd);
  analyze_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--load-threshold", load_threshold, "Responsibilities an agent may hold (default 5)")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--fail-level", fail_level, "Lowest severity that yields exit status 1")
      ->check(CLI::IsMember(levels));

  auto* elicit = app.add_subcommand("elicit", "Emit the six-question questionnaire as an .answers skeleton");
  add_model(elicit);
  add_responsibility(elicit);
  add_output(elicit);

  auto* ingest_cmd = app.add_subcommand("ingest", "Merge an .answers file into a model and print the result");
  add_model(ingest_cmd);
  ingest_cmd->add_option("ANSWERS", second, "Answers file (.answers)")->required();
  ingest_cmd->add_flag("--strict", strict, "Reject references to undeclared elements");
  add_output(ingest_cmd);

  auto* tables = app.add_subcommand("tables", "Information required/recorded tables");
  add_model(tables);
  add_responsibility(tables);
  tables->add_option("--format", format, "md or csv")->check(CLI::IsMember({"md", "csv"}));
  tables->add_option("--which", which, "required, recorded or both")
      ->check(CLI::IsMember({"required", "recorded", "both"}));

  auto* hazards_cmd = app.add_subcommand("hazards", "Information-hazard worksheet");
  add_model(hazards_cmd);
  add_responsibility(hazards_cmd);
  hazards_cmd->add_option("--format", format, "md or csv")->check(CLI::IsMember({"md", "csv"}));

  auto* mitigations = app.add_subcommand("mitigations", "Requirement stubs for unmitigated hazards (.reqs syntax)");
  add_model(mitigations);
  add_responsibility(mitigations);
  mitigations->add_option("--threshold", threshold, "Lowest severity needing a mitigation (default medium)")
      ->check(CLI::IsMember(levels));

  auto* requirements = app.add_subcommand("requirements", "Check requirement traces against a model");
  add_model(requirements);
  requirements->add_option("REQS", second, "Requirements file (.reqs)")->required();
  requirements->add_flag("--report", report, "Print the numbered requirements report");

  auto* dot = app.add_subcommand("dot", "Graphviz diagram of the model");
  add_model(dot);
  add_output(dot);

  auto* diff = app.add_subcommand("diff", "Compare two organizations' models");
  add_model(diff, "LEFT");
  diff->add_option("RIGHT", second, "Right-hand model")->required();
  diff->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  diff->add_option("--fail-level", fail_level, "Lowest severity that yields exit status 1")
      ->check(CLI::IsMember(levels));

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());  // CLI11 consumes a reversed vector
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kError;
  }

  auto emit = [&](const std::string& text) {
    if (output.empty()) {
      out << text;
      return;
    }
    std::ofstream file_out(output, std::ios::binary);
    if (!file_out || !(file_out << text)) throw Error("cannot write '" + output + "'");
  };
  const Severity fail_at = detail::severity_map().at(fail_level);

  try {
    if (check->parsed()) {
      const Model model = detail::load_model(file, in);
      const auto diags = validate(model, strict ? ValidationMode::strict : ValidationMode::lenient);
      err << diagnostics_report(diags);
      out << file << ": " << model.responsibilities.size() << " responsibilities, "
          << count_line(diags.size(), "diagnostic", "diagnostics");
      const bool critical =
          std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.severity == Severity::critical; });
      return critical ? kFindings : kSuccess;
    }
    if (analyze_cmd->parsed()) {
      const Model model = detail::load_model(file, in);
      const auto findings = analyze(model, AnalysisOptions{load_threshold});
      out << findings_report(findings, format == "json" ? ReportFormat::json : ReportFormat::text);
      const bool failing =
          std::any_of(findings.begin(), findings.end(), [&](const Finding& f) { return f.severity >= fail_at; });
      return failing ? kFindings : kSuccess;
    }
    if (elicit->parsed()) {
      const Model model = detail::load_model(file, in);
      emit(render_questionnaire(model, generate_questionnaire(model, responsibility)));
      return kSuccess;
    }
    if (ingest_cmd->parsed()) {
      Model model = detail::load_model(file, in);
      for (const auto& record : parse_answers(detail::read_file(second, in), second)) {
        model = ingest(model, record, strict ? ValidationMode::strict : ValidationMode::lenient);
      }
      emit(print_model(model));
      return kSuccess;
    }
    if (tables->parsed()) {
      const Model model = detail::load_model(file, in);
      auto render = [&](const InfoTable& t) { return format == "csv" ? table_to_csv(t) : table_to_markdown(t); };
      std::string text;
      if (which != "recorded") text += render(information_required_table(model, responsibility));
      if (which == "both") text += format == "csv" ? "\r\n" : "\n";
      if (which != "required") text += render(information_recorded_table(model, responsibility));
      out << text;
      return kSuccess;
    }
    if (hazards_cmd->parsed()) {
      const Model model = detail::load_model(file, in);
      const auto sheet = generate_worksheet(model, responsibility);
      const auto table = worksheet_table(model, sheet);
      out << (format == "csv" ? table_to_csv(table) : table_to_markdown(table));
      std::size_t assessed = 0;
      for (const auto& row : sheet.rows) assessed += row.assessed() ? 1 : 0;
      err << "coverage: " << assessed << "/" << sheet.rows.size() << " rows assessed\n";
      return kSuccess;
    }
    if (mitigations->parsed()) {
      const Model model = detail::load_model(file, in);
      out << print_requirements(derive_mitigations(model, responsibility, detail::severity_map().at(threshold)));
      return kSuccess;
    }
    if (requirements->parsed()) {
      const Model model = detail::load_model(file, in);
      const auto reqs = parse_requirements(detail::read_file(second, in), second);
      if (auto bad = unresolved_traces(model, reqs); !bad.empty()) throw Error(std::move(bad));
      if (report) {
        out << requirements_report(model, reqs);
      } else {
        std::size_t traces = 0;
        for (const auto& r : reqs) traces += r.traces.size();
        out << second << ": " << reqs.size() << (reqs.size() == 1 ? " requirement, " : " requirements, ") << traces
            << (traces == 1 ? " trace" : " traces") << " resolved\n";
      }
      return kSuccess;
    }
    if (dot->parsed()) {
      emit(to_dot(detail::load_model(file, in)));
      return kSuccess;
    }
    if (diff->parsed()) {
      const Model left = detail::load_model(file, in);
      const Model right = detail::load_model(second, in);
      const auto diffs = diff_models(left, right);
      out << diff_report(diffs, format == "json" ? ReportFormat::json : ReportFormat::text);
      const bool failing = std::any_of(diffs.begin(), diffs.end(),
                                       [&](const PerceptionInconsistency& d) { return severity_of(d.kind) >= fail_at; });
      return failing ? kFindings : kSuccess;
    }
  } catch (const Error& e) {
    for (const auto& m : e.messages()) err << m << "\n";
    return kError;
  }
  err << app.help();
  return kError;
}

}  // namespace respmod::cli
