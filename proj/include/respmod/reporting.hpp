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

// Renderers: Markdown and CSV tables, Graphviz DOT diagrams, findings and
// diff reports (text or JSON), and the traced requirements report. All output
// uses LF line endings except CSV, which uses CRLF.

#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "respmod/analysis.hpp"
#include "respmod/declarations.hpp"
#include "respmod/diff.hpp"
#include "respmod/elicitation.hpp"
#include "respmod/hazards.hpp"
#include "respmod/model.hpp"
#include "respmod/validate.hpp"

namespace respmod {

// ---------------------------------------------------------------------------
// Tables

/// Pipe table. `|` in cells is escaped as `\|`, line breaks become `<br>`.
inline std::string table_to_markdown(const InfoTable& table) {
  auto cell = [](std::string_view s) {
    std::string out;
    for (const char c : s) {
      if (c == '|') {
        out += "\\|";
      } else if (c == '\n') {
        out += "<br>";
      } else if (c != '\r') {
        out += c;
      }
    }
    return out;
  };
  auto row = [&](const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const auto& c : cells) out += " " + cell(c) + " |";
    return out + "\n";
  };
  std::string out = row(table.columns);
  out += "|";
  for (std::size_t i = 0; i < table.columns.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& r : table.rows) out += row(r);
  return out;
}

/// RFC 4180 CSV with CRLF record separators.
inline std::string table_to_csv(const InfoTable& table) {
  auto field = [](std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (const char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  auto record = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + field(cells[i]);
    return out + "\r\n";
  };
  std::string out = record(table.columns);
  for (const auto& r : table.rows) out += record(r);
  return out;
}

inline InfoTable worksheet_table(const Model& model, const Worksheet& worksheet) {
  InfoTable t{"Information hazards: " + worksheet.responsibility,
              {"Information item", "Guide word", "Consequence", "Severity", "Mitigation"},
              {}};
  for (const auto& row : worksheet.rows) {
    t.rows.push_back({model.resource_name(row.item), std::string(to_string(row.guide_word)), row.consequence,
                      std::string(to_string(row.severity)), row.mitigation.value_or("")});
  }
  return t;
}

// ---------------------------------------------------------------------------
// DOT

namespace detail {

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Graph in the responsibility-model notation: rounded boxes for
/// responsibilities, `<agent>`, `[physical]` and `|information|` labels, solid
/// arrows for information flow, dashed arrows for sequencing. Resource use
/// and assignment edges carry no arrowhead. Layout is left to Graphviz.
inline std::string to_dot(const Model& model) {
  using detail::dot_quote;
  auto agent_node = [](const AgentId& id) { return "agent-" + id; };
  auto resource_node = [&](const ResourceId& id) {
    const auto* r = model.find_resource(id);
    return (r && r->kind == ResourceKind::physical ? "phys-" : "info-") + id;
  };

  std::string out = "digraph " + dot_quote(model.name) + " {\n";
  out += "  node [fontname=\"Helvetica\"];\n";

  if (!model.responsibilities.empty()) out += "\n  // responsibilities\n";
  for (const auto& r : model.responsibilities) {
    out += "  " + dot_quote(r.id) + " [label=" + dot_quote(r.name) + ", shape=box, style=rounded];\n";
  }
  if (!model.agents.empty()) out += "\n  // agents\n";
  for (const auto& a : model.agents) {
    out += "  " + dot_quote(agent_node(a.id)) + " [label=" + dot_quote("<" + a.name + ">") + ", shape=plaintext];\n";
  }
  if (!model.resources.empty()) out += "\n  // resources\n";
  for (const auto& r : model.resources) {
    const bool physical = r.kind == ResourceKind::physical;
    out += "  " + dot_quote(resource_node(r.id)) + " [label=" +
           dot_quote(physical ? "[" + r.name + "]" : "|" + r.name + "|") +
           (physical ? ", shape=box3d];\n" : ", shape=note];\n");
  }

  std::string assignments, flows, uses, sequence;
  std::set<std::pair<std::string, std::string>> source_edges;
  auto channel_label = [&](const std::vector<ChannelId>& channels) {
    std::string label;
    for (const auto& c : channels) label += (label.empty() ? "" : ", ") + model.channel_name(c);
    return label.empty() ? std::string("];\n") : ", label=" + dot_quote(label) + "];\n";
  };
  for (const auto& r : model.responsibilities) {
    for (const auto& a : r.assigned_to) {
      assignments += "  " + dot_quote(agent_node(a)) + " -> " + dot_quote(r.id) + " [arrowhead=none, style=bold];\n";
    }
    for (const auto& n : r.needs) {
      for (const auto& s : n.sources) {
        if (source_edges.emplace(s, n.resource).second) {
          flows += "  " + dot_quote(agent_node(s)) + " -> " + dot_quote(resource_node(n.resource)) + " [style=solid];\n";
        }
      }
      flows += "  " + dot_quote(resource_node(n.resource)) + " -> " + dot_quote(r.id) + " [style=solid" +
               channel_label(n.channels);
    }
    for (const auto& p : r.products) {
      flows += "  " + dot_quote(r.id) + " -> " + dot_quote(resource_node(p.resource)) + " [style=solid" +
               channel_label(p.channels);
    }
    for (const auto& u : r.uses) {
      uses += "  " + dot_quote(resource_node(u)) + " -> " + dot_quote(r.id) + " [dir=none];\n";
    }
  }
  for (const auto& link : model.sequence_links) {
    sequence += "  " + dot_quote(link.from) + " -> " + dot_quote(link.to) + " [style=dashed];\n";
  }
  if (!assignments.empty()) out += "\n  // assignments\n" + assignments;
  if (!flows.empty()) out += "\n  // information flow\n" + flows;
  if (!uses.empty()) out += "\n  // resource use\n" + uses;
  if (!sequence.empty()) out += "\n  // sequence\n" + sequence;
  return out + "}\n";
}

// ---------------------------------------------------------------------------
// Findings, diagnostics and diffs

enum class ReportFormat { text, json };

inline std::string count_line(std::size_t n, std::string_view singular, std::string_view plural) {
  return std::to_string(n) + " " + std::string(n == 1 ? singular : plural) + "\n";
}

/// Text: one `CODE severity subject: explanation` line per finding plus a
/// count line. JSON: an array of objects with keys in the order code,
/// severity, subjects, explanation.
inline std::string findings_report(const std::vector<Finding>& findings, ReportFormat format) {
  if (format == ReportFormat::json) {
    auto array = nlohmann::ordered_json::array();
    for (const auto& f : findings) {
      nlohmann::ordered_json entry;
      entry["code"] = f.code;
      entry["severity"] = std::string(to_string(f.severity));
      entry["subjects"] = f.subjects;
      entry["explanation"] = f.explanation;
      array.push_back(std::move(entry));
    }
    return array.dump(2) + "\n";
  }
  std::string out;
  for (const auto& f : findings) {
    out += f.code + " " + std::string(to_string(f.severity)) + " " + f.subject() + ": " + f.explanation + "\n";
  }
  return out + count_line(findings.size(), "finding", "findings");
}

inline std::string diagnostics_report(const std::vector<Diagnostic>& diags) {
  std::string out;
  for (const auto& d : diags) out += d.render() + "\n";
  return out;
}

/// Text lines or a JSON array with keys kind, severity, responsibility, item,
/// product, left, right.
inline std::string diff_report(const std::vector<PerceptionInconsistency>& diffs, ReportFormat format) {
  if (format == ReportFormat::json) {
    auto array = nlohmann::ordered_json::array();
    for (const auto& d : diffs) {
      nlohmann::ordered_json entry;
      entry["kind"] = std::string(to_string(d.kind));
      entry["severity"] = std::string(to_string(severity_of(d.kind)));
      entry["responsibility"] = d.responsibility;
      entry["item"] = d.item.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(d.item);
      entry["product"] = d.product;
      entry["left"] = d.left;
      entry["right"] = d.right;
      array.push_back(std::move(entry));
    }
    return array.dump(2) + "\n";
  }
  std::string out;
  for (const auto& d : diffs) out += d.render() + "\n";
  return out + count_line(diffs.size(), "inconsistency", "inconsistencies");
}

// ---------------------------------------------------------------------------
// Requirements

/// Traces in `reqs` that name nothing in `model`, rendered as
/// `REQ-ID: traces |X|`. A hazard trace resolves when some responsibility
/// requires the named information item.
inline std::vector<std::string> unresolved_traces(const Model& model, const std::vector<RequirementRecord>& reqs) {
  auto info = [&](const std::string& name) -> const Resource* {
    for (const auto& r : model.resources)
      if (r.name == name && r.kind == ResourceKind::information) return &r;
    return nullptr;
  };
  std::vector<std::string> out;
  for (const auto& req : reqs) {
    for (const auto& t : req.traces) {
      bool ok = false;
      switch (t.kind) {
        case TraceKind::information: ok = info(t.name) != nullptr; break;
        case TraceKind::agent:
          ok = std::any_of(model.agents.begin(), model.agents.end(), [&](const Agent& a) { return a.name == t.name; });
          break;
        case TraceKind::responsibility: ok = model.find_responsibility_by_name(t.name) != nullptr; break;
        case TraceKind::hazard: {
          const Resource* r = info(t.name);
          ok = r && std::any_of(model.responsibilities.begin(), model.responsibilities.end(),
                                [&](const Responsibility& x) { return x.find_need(r->id) != nullptr; });
          break;
        }
      }
      if (!ok) {
        std::string where = t.at.span.file.empty() ? "" : t.at.span.render() + ": ";
        out.push_back(where + "error: requirement " + req.id + " traces unknown " + t.render());
      }
    }
  }
  return out;
}

/// Numbered Markdown report: requirement text, italic parenthesised
/// rationale, then the trace line. Throws if any trace does not resolve.
inline std::string requirements_report(const Model& model, const std::vector<RequirementRecord>& reqs) {
  if (auto bad = unresolved_traces(model, reqs); !bad.empty()) throw Error(std::move(bad));

  std::string out = "# Requirements";
  if (!model.name.empty()) out += ": " + model.name;
  out += "\n";
  std::size_t traces = 0;
  for (std::size_t i = 0; i < reqs.size(); ++i) {
    const auto& r = reqs[i];
    out += "\n" + std::to_string(i + 1) + ". " + r.text;
    if (!r.rationale.empty()) out += " *(" + r.rationale + ")*";
    out += "\n   `" + r.id + "` traces: ";
    if (r.traces.empty()) out += "(none)";
    for (std::size_t j = 0; j < r.traces.size(); ++j) out += (j ? ", " : "") + r.traces[j].render();
    out += "\n";
    traces += r.traces.size();
  }
  out += "\n" + std::to_string(reqs.size()) + (reqs.size() == 1 ? " requirement, " : " requirements, ") +
         std::to_string(traces) + (traces == 1 ? " trace\n" : " traces\n");
  return out;
}

}  // namespace respmod
