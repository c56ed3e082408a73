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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "respmod/build.hpp"
#include "respmod/declarations.hpp"
#include "respmod/model.hpp"

namespace respmod {

namespace dsl {

inline std::string quote(std::string_view s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string join_refs(const std::vector<NameRef>& refs, char open, char close) {
  std::string out;
  for (const auto& r : refs) {
    if (!out.empty()) out += ", ";
    out += open;
    out += r.name;
    out += close;
  }
  return out;
}

inline std::string join_quoted(const std::vector<NameRef>& refs) {
  std::string out;
  for (const auto& r : refs) {
    if (!out.empty()) out += ", ";
    out += quote(r.name);
  }
  return out;
}

inline std::string need_clause(const NeedDecl& n) {
  std::string out = "|" + n.resource.name + "|";
  if (!n.sources.empty()) out += " from " + join_refs(n.sources, '<', '>');
  if (!n.channels.empty()) out += " via " + join_quoted(n.channels);
  return out;
}

inline std::string product_clause(const ProductDecl& p) {
  std::string out = "|" + p.resource.name + "|";
  if (!p.channels.empty()) out += " via " + join_quoted(p.channels);
  if (p.rationale) out += " rationale " + quote(*p.rationale);
  return out;
}

inline std::string hazard_tail(const HazardDecl& h) {
  std::string out = std::string(to_string(h.guide_word)) + " " + quote(h.consequence);
  if (h.severity) out += " severity " + std::string(to_string(*h.severity));
  return out;
}

}  // namespace dsl

/// Prints declarations in `.resp` syntax: one clause per line, two-space
/// indentation, sections separated by blank lines.
inline std::string print_declarations(const std::vector<Declaration>& decls) {
  using namespace dsl;
  std::string head, agents, resources, channels, body;
  for (const auto& decl : decls) {
    if (const auto* m = std::get_if<ModelDecl>(&decl)) {
      head = "model " + quote(m->name) + "\n";
    } else if (const auto* a = std::get_if<AgentDecl>(&decl)) {
      agents += "agent <" + a->agent.name + ">";
      if (a->kind) agents += " kind " + std::string(to_string(*a->kind));
      agents += "\n";
    } else if (const auto* r = std::get_if<ResourceDecl>(&decl)) {
      resources += r->kind == ResourceKind::physical ? "resource [" + r->resource.name + "]\n"
                                                     : "resource |" + r->resource.name + "|\n";
    } else if (const auto* c = std::get_if<ChannelDecl>(&decl)) {
      channels += "channel " + quote(c->channel.name);
      if (c->medium) channels += " medium " + *c->medium;
      if (c->backup_of) channels += " backup_of " + quote(c->backup_of->name);
      channels += "\n";
    } else if (const auto* rd = std::get_if<ResponsibilityDecl>(&decl)) {
      body += "\nresponsibility " + quote(rd->name.name) + " {\n";
      if (!rd->assigned_to.empty()) body += "  assigned to " + join_refs(rd->assigned_to, '<', '>') + "\n";
      for (const auto& n : rd->needs) {
        body += "  requires " + need_clause(n);
        if (n.criticality) body += " criticality " + std::string(to_string(*n.criticality));
        body += "\n";
      }
      for (const auto& p : rd->products) body += "  produces " + product_clause(p) + "\n";
      for (const auto& u : rd->uses) body += "  uses [" + u.name + "]\n";
      for (const auto& p : rd->precedes) body += "  precedes " + quote(p.name) + "\n";
      for (const auto& note : rd->notes) body += "  note " + quote(note) + "\n";
      for (const auto& h : rd->hazards) {
        body += "  hazard |" + h.item.name + "| " + hazard_tail(h);
        if (h.mitigation) body += " mitigation " + *h.mitigation;
        body += "\n";
      }
      body += "}\n";
    }
  }
  std::string out = head.empty() ? "model \"\"\n" : head;
  for (const auto* section : {&agents, &resources, &channels}) {
    if (!section->empty()) out += "\n" + *section;
  }
  return out + body;
}

/// Canonical `.resp` text for a model: every element declared explicitly, in
/// canonical order. Re-parsing the output yields an equal model.
inline std::string print_model(const Model& model) { return print_declarations(to_declarations(model)); }

/// `.reqs` text for a list of requirement records.
inline std::string print_requirements(const std::vector<RequirementRecord>& reqs) {
  using dsl::quote;
  std::string out;
  for (const auto& r : reqs) {
    if (!out.empty()) out += "\n";
    out += "requirement " + r.id + " {\n";
    out += "  text " + quote(r.text) + "\n";
    out += "  rationale " + quote(r.rationale) + "\n";
    for (const auto& t : r.traces) out += "  traces " + t.render() + "\n";
    out += "}\n";
  }
  return out;
}

}  // namespace respmod
