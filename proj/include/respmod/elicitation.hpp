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

// Six-question information-requirements elicitation per responsibility:
// questionnaire generation, merging of structured answers into a model, and
// the "information required" / "information recorded" tables.

#pragma once

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "respmod/build.hpp"
#include "respmod/declarations.hpp"
#include "respmod/model.hpp"
#include "respmod/printer.hpp"
#include "respmod/validate.hpp"

namespace respmod {

/// What kind of `.answers` content a question is answered with.
enum class AnswerSlot { need_lines, channel_annotations, record_lines, hazard_blocks };

struct Question {
  int number = 0;
  std::string_view prompt;
  AnswerSlot slot = AnswerSlot::need_lines;
  std::vector<std::string> draft;  // answers already present in the model
};

struct Questionnaire {
  std::string responsibility;
  std::vector<Question> questions;
};

inline constexpr std::array<std::string_view, 6> kQuestionPrompts = {
    "What information needs to be provided to discharge this responsibility?",
    "What channels are used to communicate this information?",
    "Where does this information come from?",
    "What information is generated and recorded in the discharge of this responsibility and why?",
    "What channels are used to communicate this recorded information?",
    "What are the consequences if the information required is unavailable, inaccurate, incomplete, late, early?",
};

inline constexpr std::array<AnswerSlot, 6> kQuestionSlots = {
    AnswerSlot::need_lines,   AnswerSlot::channel_annotations, AnswerSlot::need_lines,
    AnswerSlot::record_lines, AnswerSlot::channel_annotations, AnswerSlot::hazard_blocks,
};

namespace detail {

inline std::vector<NameRef> name_refs(const std::vector<std::string>& ids, auto&& lookup) {
  std::vector<NameRef> out;
  for (const auto& id : ids) out.push_back(NameRef{lookup(id), {}});
  return out;
}

inline NeedDecl need_decl(const Model& m, const InfoNeed& n) {
  return NeedDecl{NameRef{m.resource_name(n.resource), {}},
                  name_refs(n.sources, [&](const auto& id) { return m.agent_name(id); }),
                  name_refs(n.channels, [&](const auto& id) { return m.channel_name(id); }), std::nullopt};
}

inline ProductDecl product_decl(const Model& m, const InfoProduct& p) {
  return ProductDecl{NameRef{m.resource_name(p.resource), {}},
                     name_refs(p.channels, [&](const auto& id) { return m.channel_name(id); }), p.rationale};
}

inline HazardDecl hazard_decl(const Model& m, const HazardEntry& h) {
  HazardDecl d;
  d.item = NameRef{m.resource_name(h.item), {}};
  d.guide_word = h.guide_word;
  d.consequence = h.consequence;
  d.severity = h.severity;
  return d;
}

}  // namespace detail

/// The six questions for one responsibility, with any needs, products and
/// hazard assessments already in the model attached as draft answers.
inline Questionnaire generate_questionnaire(const Model& model, std::string_view responsibility) {
  const Responsibility& resp = require_responsibility(model, responsibility);
  Questionnaire q;
  q.responsibility = resp.name;
  for (int i = 0; i < 6; ++i) q.questions.push_back({i + 1, kQuestionPrompts[i], kQuestionSlots[i], {}});

  auto& drafts = q.questions;
  for (const auto& n : resp.needs) {
    const auto d = detail::need_decl(model, n);
    const std::string item = "|" + d.resource.name + "|";
    drafts[0].draft.push_back(item);
    if (!d.channels.empty()) drafts[1].draft.push_back(item + " via " + dsl::join_quoted(d.channels));
    if (!d.sources.empty()) drafts[2].draft.push_back(item + " from " + dsl::join_refs(d.sources, '<', '>'));
  }
  for (const auto& p : resp.products) {
    const auto d = detail::product_decl(model, p);
    const std::string item = "|" + d.resource.name + "|";
    drafts[3].draft.push_back(d.rationale ? item + " rationale " + dsl::quote(*d.rationale) : item);
    if (!d.channels.empty()) drafts[4].draft.push_back(item + " via " + dsl::join_quoted(d.channels));
  }
  for (const auto& h : resp.hazards) {
    drafts[5].draft.push_back("|" + model.resource_name(h.item) + "| " + dsl::hazard_tail(detail::hazard_decl(model, h)));
  }
  return q;
}

/// Questionnaire as an editable `.answers` skeleton. The questions appear as
/// comments; existing answers appear as live lines, so ingesting the
/// unedited skeleton leaves the model unchanged.
inline std::string render_questionnaire(const Model& model, const Questionnaire& q) {
  static constexpr std::array<std::string_view, 6> hints = {
      "one line per item in the needs block: |item|",
      "add  via \"channel\", \"channel\"  to each needs line",
      "add  from <agent>, <agent>  to each needs line (before via)",
      "one line per item in the records block: |item| via \"channel\" rationale \"why\"",
      "add  via \"channel\"  to each records line",
      "one hazards block per required item, one line per guide word:\n#        WORD \"consequence\" severity none|low|medium|high|critical",
  };
  const Responsibility& resp = require_responsibility(model, q.responsibility);

  std::string out = "# Elicitation questionnaire for " + dsl::quote(q.responsibility) + "\n";
  out += "# Model: " + dsl::quote(model.name) + "\n#\n";
  for (const auto& question : q.questions) {
    out += "# Q" + std::to_string(question.number) + ". " + std::string(question.prompt) + "\n";
    out += "#     -> " + std::string(hints[question.number - 1]) + "\n";
  }
  out += "\nelicitation " + dsl::quote(q.responsibility) + " {\n";
  out += "  needs {\n";
  for (const auto& n : resp.needs) out += "    " + dsl::need_clause(detail::need_decl(model, n)) + "\n";
  out += "  }\n";
  out += "  records {\n";
  for (const auto& p : resp.products) out += "    " + dsl::product_clause(detail::product_decl(model, p)) + "\n";
  out += "  }\n";
  for (const auto& n : resp.needs) {
    out += "  hazards |" + model.resource_name(n.resource) + "| {\n";
    for (const auto word : kGuideWords) {
      if (const auto* h = resp.find_hazard(n.resource, word)) {
        out += "    " + dsl::hazard_tail(detail::hazard_decl(model, *h)) + "\n";
      } else {
        out += "    # " + std::string(to_string(word)) + " \"\" severity none\n";
      }
    }
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

/// Merges structured answers into a copy of `model`. Answers only ever add:
/// existing needs, products and assessments are kept, so ingesting the same
/// record twice gives the same model as ingesting it once. In strict mode every
/// agent, resource and channel named in the record must already exist.
inline Model ingest(const Model& model, const ElicitationRecord& record,
                    ValidationMode mode = ValidationMode::lenient) {
  require_responsibility(model, record.responsibility);

  if (mode == ValidationMode::strict) {
    std::set<std::string> agents, resources, channels;
    for (const auto& a : model.agents) agents.insert(a.name);
    for (const auto& r : model.resources) resources.insert(r.name);
    for (const auto& c : model.channels) channels.insert(c.name);

    std::vector<BuildError> unresolved;
    auto need_resource = [&](const NameRef& ref) {
      if (!resources.count(ref.name)) unresolved.push_back({ref.at.span, "unknown information resource |" + ref.name + "|"});
    };
    auto need_agent = [&](const NameRef& ref) {
      if (!agents.count(ref.name)) unresolved.push_back({ref.at.span, "unknown agent <" + ref.name + ">"});
    };
    auto need_channel = [&](const NameRef& ref) {
      if (!channels.count(ref.name)) unresolved.push_back({ref.at.span, "unknown channel \"" + ref.name + "\""});
    };
    for (const auto& n : record.needs) {
      need_resource(n.resource);
      for (const auto& s : n.sources) need_agent(s);
      for (const auto& c : n.channels) need_channel(c);
    }
    for (const auto& p : record.records) {
      need_resource(p.resource);
      for (const auto& c : p.channels) need_channel(c);
    }
    for (const auto& h : record.hazards) need_resource(h.item);
    if (!unresolved.empty()) throw BuildFailure(std::move(unresolved));
  }

  auto decls = to_declarations(model, /*include_implicit=*/false);
  for (auto& decl : decls) {
    auto* rd = std::get_if<ResponsibilityDecl>(&decl);
    if (!rd || rd->name.name != record.responsibility) continue;
    rd->needs.insert(rd->needs.end(), record.needs.begin(), record.needs.end());
    rd->products.insert(rd->products.end(), record.records.begin(), record.records.end());
    rd->hazards.insert(rd->hazards.end(), record.hazards.begin(), record.hazards.end());
  }
  return build_model(decls);
}

/// A rendered table. Cells hold model names verbatim.
struct InfoTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const InfoTable&) const = default;
};

namespace detail {

inline std::string join_names(const std::vector<std::string>& ids, auto&& lookup) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += lookup(id);
  }
  return out;
}

}  // namespace detail

inline InfoTable information_required_table(const Model& model, std::string_view responsibility) {
  const Responsibility& resp = require_responsibility(model, responsibility);
  InfoTable t{"Information required: " + resp.name, {"Information required", "Source", "Communication channel"}, {}};
  for (const auto& n : resp.needs) {
    t.rows.push_back({model.resource_name(n.resource),
                      detail::join_names(n.sources, [&](const auto& id) { return model.agent_name(id); }),
                      detail::join_names(n.channels, [&](const auto& id) { return model.channel_name(id); })});
  }
  return t;
}

inline InfoTable information_recorded_table(const Model& model, std::string_view responsibility) {
  const Responsibility& resp = require_responsibility(model, responsibility);
  InfoTable t{"Information recorded: " + resp.name, {"Information created/recorded", "Channels"}, {}};
  for (const auto& p : resp.products) {
    t.rows.push_back({model.resource_name(p.resource),
                      detail::join_names(p.channels, [&](const auto& id) { return model.channel_name(id); })});
  }
  return t;
}

}  // namespace respmod
