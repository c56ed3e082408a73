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

// Whole-model validation.
//
// Diagnostic catalog:
//
//   code             severity  mode     meaning
//   SEQUENCE_CYCLE   critical  lenient  responsibilities that precede each other
//   UNASSIGNED_RESP  high      lenient  responsibility with no agent
//   UNSOURCED_INFO   medium    lenient  need with no source and no producer
//   IMPLICIT_DECL    low       strict   element only ever mentioned, never declared
//   NO_CHANNEL       low       strict   need or product with no channel
//
// Strict mode reports everything lenient mode does plus the strict-only codes.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "respmod/graph.hpp"
#include "respmod/model.hpp"

namespace respmod {

enum class ValidationMode { lenient, strict };

/// Reference to a model element, e.g. {"responsibility", "evacuate-area"}.
/// Need/product references use "<responsibility-id>/<resource-id>" as id.
struct ElementRef {
  std::string kind;
  std::string id;

  bool operator==(const ElementRef&) const = default;
};

struct Diagnostic {
  std::string code;
  Severity severity = Severity::none;
  std::string message;
  ElementRef subject;
  std::optional<SourceSpan> location;

  bool operator==(const Diagnostic&) const = default;

  /// `[file:line:col: ]CODE severity subject: message`
  std::string render() const {
    std::string out;
    if (location) out += location->render() + ": ";
    return out + code + " " + std::string(to_string(severity)) + " " + subject.id + ": " + message;
  }
};

/// True if nobody is recorded as the source of `need` and no responsibility
/// in the model produces its resource.
inline bool is_unsourced(const Model& model, const InfoNeed& need) {
  if (!need.sources.empty()) return false;
  return std::none_of(model.responsibilities.begin(), model.responsibilities.end(),
                      [&](const Responsibility& r) { return r.find_product(need.resource) != nullptr; });
}

inline void sort_diagnostics(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.code, a.subject.id, a.subject.kind, a.message) <
           std::tie(b.code, b.subject.id, b.subject.kind, b.message);
  });
}

inline std::vector<Diagnostic> validate(const Model& model, ValidationMode mode = ValidationMode::lenient) {
  std::vector<Diagnostic> out;

  for (const auto& r : model.responsibilities) {
    if (r.assigned_to.empty()) {
      out.push_back({"UNASSIGNED_RESP", Severity::high, "responsibility \"" + r.name + "\" has no assigned agent",
                     {"responsibility", r.id}, r.origin.span});
    }
    for (const auto& n : r.needs) {
      if (is_unsourced(model, n)) {
        out.push_back({"UNSOURCED_INFO", Severity::medium,
                       "|" + model.resource_name(n.resource) + "| required by \"" + r.name +
                           "\" has no source and no producer",
                       {"need", r.id + "/" + n.resource}, n.origin.span});
      }
    }
  }

  for (const auto& cycle : sequence_cycles(model)) {
    std::string members;
    for (const auto& id : cycle) {
      if (!members.empty()) members += ", ";
      members += "\"" + model.responsibility_name(id) + "\"";
    }
    std::string id;
    for (const auto& m : cycle) id += (id.empty() ? "" : ",") + m;
    out.push_back({"SEQUENCE_CYCLE", Severity::critical, "precedes links form a cycle: " + members,
                   {"responsibility", id}, model.find_responsibility(cycle.front())->origin.span});
  }

  if (mode == ValidationMode::strict) {
    auto implicit = [&](const auto& items, const char* kind, auto&& label) {
      for (const auto& x : items) {
        if (x.origin.implicit) {
          out.push_back({"IMPLICIT_DECL", Severity::low, std::string(kind) + " " + label(x) + " is never declared",
                         {kind, x.id}, x.origin.span});
        }
      }
    };
    implicit(model.agents, "agent", [](const Agent& a) { return "<" + a.name + ">"; });
    implicit(model.resources, "resource", [](const Resource& r) {
      return r.kind == ResourceKind::physical ? "[" + r.name + "]" : "|" + r.name + "|";
    });
    implicit(model.channels, "channel", [](const Channel& c) { return "\"" + c.name + "\""; });

    for (const auto& r : model.responsibilities) {
      for (const auto& n : r.needs) {
        if (n.channels.empty()) {
          out.push_back({"NO_CHANNEL", Severity::low,
                         "|" + model.resource_name(n.resource) + "| required by \"" + r.name + "\" has no channel",
                         {"need", r.id + "/" + n.resource}, n.origin.span});
        }
      }
      for (const auto& p : r.products) {
        if (p.channels.empty()) {
          out.push_back({"NO_CHANNEL", Severity::low,
                         "|" + model.resource_name(p.resource) + "| produced by \"" + r.name + "\" has no channel",
                         {"product", r.id + "/" + p.resource}, p.origin.span});
        }
      }
    }
  }

  sort_diagnostics(out);
  return out;
}

}  // namespace respmod
