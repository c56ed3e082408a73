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

// Domain model of a responsibility model: agents, resources, channels and
// the responsibilities that tie them together. Values are built once by
// build_model() and never mutated afterwards; every transformation returns a
// new Model.

#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "respmod/error.hpp"

namespace respmod {

using AgentId = std::string;
using ResourceId = std::string;
using ChannelId = std::string;
using ResponsibilityId = std::string;

enum class Severity { none, low, medium, high, critical };

inline constexpr std::array<std::string_view, 5> kSeverityNames = {"none", "low", "medium", "high",
                                                                   "critical"};

inline std::string_view to_string(Severity s) { return kSeverityNames[static_cast<int>(s)]; }

inline std::optional<Severity> parse_severity(std::string_view token) {
  for (std::size_t i = 0; i < kSeverityNames.size(); ++i) {
    if (kSeverityNames[i] == token) return static_cast<Severity>(i);
  }
  return std::nullopt;
}

/// HAZOP-style deviation prompts for an information item, in canonical order.
enum class GuideWord { unavailable, inaccurate, incomplete, late, early };

inline constexpr std::array<GuideWord, 5> kGuideWords = {GuideWord::unavailable, GuideWord::inaccurate,
                                                         GuideWord::incomplete, GuideWord::late,
                                                         GuideWord::early};

inline constexpr std::array<std::string_view, 5> kGuideWordNames = {"unavailable", "inaccurate",
                                                                    "incomplete", "late", "early"};

inline std::string_view to_string(GuideWord g) { return kGuideWordNames[static_cast<int>(g)]; }

inline std::optional<GuideWord> parse_guide_word(std::string_view token) {
  for (std::size_t i = 0; i < kGuideWordNames.size(); ++i) {
    if (kGuideWordNames[i] == token) return static_cast<GuideWord>(i);
  }
  return std::nullopt;
}

enum class AgentKind { organization, role, person, system, group };

inline constexpr std::array<std::string_view, 5> kAgentKindNames = {"organization", "role", "person",
                                                                    "system", "group"};

inline std::string_view to_string(AgentKind k) { return kAgentKindNames[static_cast<int>(k)]; }

inline std::optional<AgentKind> parse_agent_kind(std::string_view token) {
  for (std::size_t i = 0; i < kAgentKindNames.size(); ++i) {
    if (kAgentKindNames[i] == token) return static_cast<AgentKind>(i);
  }
  return std::nullopt;
}

enum class ResourceKind { physical, information };

inline std::string_view to_string(ResourceKind k) {
  return k == ResourceKind::physical ? "physical" : "information";
}

/// Where an element came from. Never takes part in equality: two models that
/// differ only in source positions or in which elements were declared
/// implicitly compare equal.
struct Provenance {
  std::optional<SourceSpan> span;
  bool implicit = false;

  friend bool operator==(const Provenance&, const Provenance&) { return true; }
};

struct Agent {
  AgentId id;
  std::string name;
  AgentKind kind = AgentKind::organization;
  Provenance origin;

  bool operator==(const Agent&) const = default;
};

struct Resource {
  ResourceId id;
  std::string name;
  ResourceKind kind = ResourceKind::information;
  Provenance origin;

  bool operator==(const Resource&) const = default;
};

struct Channel {
  ChannelId id;
  std::string name;
  std::optional<std::string> medium;
  std::optional<ChannelId> backup_of;
  Provenance origin;

  bool operator==(const Channel&) const = default;
};

/// Information flowing into a responsibility. Sources and channels keep
/// first-mention order and hold no duplicates. Several sources record joint
/// involvement; whether any one of them suffices is deliberately unmodelled.
struct InfoNeed {
  ResourceId resource;
  std::vector<AgentId> sources;
  std::vector<ChannelId> channels;
  std::optional<Severity> criticality;
  Provenance origin;

  bool operator==(const InfoNeed&) const = default;
};

struct InfoProduct {
  ResourceId resource;
  std::vector<ChannelId> channels;
  std::optional<std::string> rationale;
  Provenance origin;

  bool operator==(const InfoProduct&) const = default;
};

/// Assessment of one guide word applied to one information item. An empty
/// consequence means the row has not been assessed yet.
struct HazardEntry {
  ResponsibilityId responsibility;
  ResourceId item;
  GuideWord guide_word = GuideWord::unavailable;
  std::string consequence;
  Severity severity = Severity::none;
  std::optional<std::string> mitigation;
  Provenance origin;

  bool operator==(const HazardEntry&) const = default;

  bool assessed() const { return !consequence.empty(); }
};

struct Responsibility {
  ResponsibilityId id;
  std::string name;
  std::vector<AgentId> assigned_to;  // may be empty: models may be incomplete
  std::vector<InfoNeed> needs;
  std::vector<InfoProduct> products;
  std::vector<ResourceId> uses;
  std::vector<std::string> notes;
  std::vector<HazardEntry> hazards;
  Provenance origin;

  bool operator==(const Responsibility&) const = default;

  const InfoNeed* find_need(std::string_view resource) const {
    auto it = std::find_if(needs.begin(), needs.end(),
                           [&](const InfoNeed& n) { return n.resource == resource; });
    return it == needs.end() ? nullptr : &*it;
  }

  const InfoProduct* find_product(std::string_view resource) const {
    auto it = std::find_if(products.begin(), products.end(),
                           [&](const InfoProduct& p) { return p.resource == resource; });
    return it == products.end() ? nullptr : &*it;
  }

  const HazardEntry* find_hazard(std::string_view item, GuideWord word) const {
    auto it = std::find_if(hazards.begin(), hazards.end(), [&](const HazardEntry& h) {
      return h.item == item && h.guide_word == word;
    });
    return it == hazards.end() ? nullptr : &*it;
  }
};

struct SequenceLink {
  ResponsibilityId from;
  ResponsibilityId to;

  bool operator==(const SequenceLink&) const = default;
};

/// A resolved responsibility model. Top-level collections are sorted by
/// display name with declaration order breaking ties; needs, products and
/// hazards inside a responsibility are sorted the same way by resource name.
struct Model {
  std::string name;
  std::vector<Agent> agents;
  std::vector<Resource> resources;
  std::vector<Channel> channels;
  std::vector<Responsibility> responsibilities;
  std::vector<SequenceLink> sequence_links;

  bool operator==(const Model&) const = default;

  const Agent* find_agent(std::string_view id) const { return find_by_id(agents, id); }
  const Resource* find_resource(std::string_view id) const { return find_by_id(resources, id); }
  const Channel* find_channel(std::string_view id) const { return find_by_id(channels, id); }
  const Responsibility* find_responsibility(std::string_view id) const {
    return find_by_id(responsibilities, id);
  }

  const Responsibility* find_responsibility_by_name(std::string_view name) const {
    auto it = std::find_if(responsibilities.begin(), responsibilities.end(),
                           [&](const Responsibility& r) { return r.name == name; });
    return it == responsibilities.end() ? nullptr : &*it;
  }

  // Display-name lookups; these fall back to the id when an element is missing
  // so renderers never print an empty cell.
  std::string agent_name(std::string_view id) const {
    const auto* a = find_agent(id);
    return a ? a->name : std::string(id);
  }
  std::string resource_name(std::string_view id) const {
    const auto* r = find_resource(id);
    return r ? r->name : std::string(id);
  }
  std::string channel_name(std::string_view id) const {
    const auto* c = find_channel(id);
    return c ? c->name : std::string(id);
  }
  std::string responsibility_name(std::string_view id) const {
    const auto* r = find_responsibility(id);
    return r ? r->name : std::string(id);
  }

 private:
  template <typename T>
  static const T* find_by_id(const std::vector<T>& items, std::string_view id) {
    auto it = std::find_if(items.begin(), items.end(), [&](const T& x) { return x.id == id; });
    return it == items.end() ? nullptr : &*it;
  }
};

/// Thrown when a responsibility name does not exist in a model; the message
/// lists the names that do.
class UnknownResponsibility : public Error {
 public:
  UnknownResponsibility(const Model& model, std::string_view name)
      : Error(message(model, name)) {}

 private:
  static std::string message(const Model& model, std::string_view name) {
    std::string out = "unknown responsibility \"" + std::string(name) + "\"; available: ";
    if (model.responsibilities.empty()) return out + "(none)";
    bool first = true;
    for (const auto& r : model.responsibilities) {
      if (!first) out += ", ";
      first = false;
      out += "\"" + r.name + "\"";
    }
    return out;
  }
};

inline const Responsibility& require_responsibility(const Model& model, std::string_view name) {
  const auto* r = model.find_responsibility_by_name(name);
  if (!r) throw UnknownResponsibility(model, name);
  return *r;
}

}  // namespace respmod
