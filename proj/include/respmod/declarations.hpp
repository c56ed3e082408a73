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

// Unresolved syntax trees produced by the parsers. Elements are referred to by
// display name here; build_model() turns names into ids.

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "respmod/error.hpp"
#include "respmod/model.hpp"

namespace respmod {

/// Source position that is invisible to equality.
struct Where {
  SourceSpan span;

  friend bool operator==(const Where&, const Where&) { return true; }
};

struct NameRef {
  std::string name;
  Where at;

  bool operator==(const NameRef&) const = default;
};

struct ModelDecl {
  std::string name;
  Where at;

  bool operator==(const ModelDecl&) const = default;
};

struct AgentDecl {
  NameRef agent;
  std::optional<AgentKind> kind;

  bool operator==(const AgentDecl&) const = default;
};

struct ResourceDecl {
  NameRef resource;
  ResourceKind kind = ResourceKind::information;

  bool operator==(const ResourceDecl&) const = default;
};

struct ChannelDecl {
  NameRef channel;
  std::optional<std::string> medium;
  std::optional<NameRef> backup_of;

  bool operator==(const ChannelDecl&) const = default;
};

struct NeedDecl {
  NameRef resource;
  std::vector<NameRef> sources;
  std::vector<NameRef> channels;
  std::optional<Severity> criticality;

  bool operator==(const NeedDecl&) const = default;
};

struct ProductDecl {
  NameRef resource;
  std::vector<NameRef> channels;
  std::optional<std::string> rationale;

  bool operator==(const ProductDecl&) const = default;
};

struct HazardDecl {
  NameRef item;
  GuideWord guide_word = GuideWord::unavailable;
  std::string consequence;
  std::optional<Severity> severity;
  std::optional<std::string> mitigation;
  Where at;

  bool operator==(const HazardDecl&) const = default;
};

struct ResponsibilityDecl {
  NameRef name;
  std::vector<NameRef> assigned_to;
  std::vector<NeedDecl> needs;
  std::vector<ProductDecl> products;
  std::vector<NameRef> uses;
  std::vector<NameRef> precedes;
  std::vector<std::string> notes;
  std::vector<HazardDecl> hazards;

  bool operator==(const ResponsibilityDecl&) const = default;
};

using Declaration = std::variant<ModelDecl, AgentDecl, ResourceDecl, ChannelDecl, ResponsibilityDecl>;

/// One `elicitation` session from an `.answers` file: the structured answers
/// gathered for a single responsibility.
struct ElicitationRecord {
  std::string responsibility;
  std::optional<std::string> by;
  std::optional<std::string> date;
  std::vector<NeedDecl> needs;
  std::vector<ProductDecl> records;
  std::vector<HazardDecl> hazards;
  Where at;

  bool operator==(const ElicitationRecord&) const = default;
};

enum class TraceKind { information, agent, responsibility, hazard };

/// A requirement's link into a model element.
struct TraceRef {
  TraceKind kind = TraceKind::information;
  std::string name;
  std::optional<GuideWord> guide_word;  // hazard traces only
  Where at;

  bool operator==(const TraceRef&) const = default;

  /// Rendering in the model notation, e.g. `|Area map|` or `<Police>`.
  std::string render() const {
    switch (kind) {
      case TraceKind::information: return "|" + name + "|";
      case TraceKind::agent: return "<" + name + ">";
      case TraceKind::responsibility: {
        std::string quoted = "responsibility \"";
        for (const char c : name) {
          if (c == '"' || c == '\\') quoted += '\\';
          quoted += c;
        }
        return quoted + "\"";
      }
      case TraceKind::hazard:
        return "hazard |" + name + "| " + std::string(to_string(guide_word.value_or(GuideWord::unavailable)));
    }
    return name;
  }
};

struct RequirementRecord {
  std::string id;
  std::string text;
  std::string rationale;
  std::vector<TraceRef> traces;
  std::optional<TraceRef> derived_from;  // set on stubs derived from a hazard
  Where at;

  bool operator==(const RequirementRecord&) const = default;
};

}  // namespace respmod
