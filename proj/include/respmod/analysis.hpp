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

// Responsibility-vulnerability checks over a resolved model.
//
// Finding catalog (severity is fixed per code):
//
//   UNASSIGNED_RESP   high    responsibility held by no agent
//   SEQUENCE_CYCLE    high    precedes links that loop back
//   UNSOURCED_INFO    medium  need with no source and no producing responsibility
//   SINGLE_CHANNEL    medium  need/product with exactly one effective channel
//   AGENT_OVERLOAD    medium  agent holding more responsibilities than the threshold
//   DUPLICATE_SOURCE  low     information obtained from differing sources, or
//                             produced by several responsibilities
//   UNUSED_RESOURCE   low     declared resource nothing requires, produces or uses
//
// Every check is a pure function of the model and returns findings sorted by
// code, then subject.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "respmod/graph.hpp"
#include "respmod/model.hpp"
#include "respmod/validate.hpp"

namespace respmod {

struct Finding {
  std::string code;
  Severity severity = Severity::none;
  std::vector<std::string> subjects;  // element ids; "resp/resource" for flows
  std::string explanation;

  bool operator==(const Finding&) const = default;

  std::string subject() const {
    std::string out;
    for (const auto& s : subjects) {
      if (!out.empty()) out += ',';
      out += s;
    }
    return out;
  }
};

inline constexpr std::size_t kDefaultLoadThreshold = 5;

inline void sort_findings(std::vector<Finding>& findings) {
  std::stable_sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
    return std::make_tuple(a.code, a.subject(), a.explanation) < std::make_tuple(b.code, b.subject(), b.explanation);
  });
}

inline std::vector<Finding> find_unassigned(const Model& model) {
  std::vector<Finding> out;
  for (const auto& r : model.responsibilities) {
    if (r.assigned_to.empty()) {
      out.push_back({"UNASSIGNED_RESP", Severity::high, {r.id}, "\"" + r.name + "\" has no agent assigned to it"});
    }
  }
  sort_findings(out);
  return out;
}

inline std::vector<Finding> find_unsourced_info(const Model& model) {
  std::vector<Finding> out;
  for (const auto& r : model.responsibilities) {
    for (const auto& n : r.needs) {
      if (is_unsourced(model, n)) {
        out.push_back({"UNSOURCED_INFO", Severity::medium, {r.id + "/" + n.resource},
                       "|" + model.resource_name(n.resource) + "| required by \"" + r.name +
                           "\" has no source and no responsibility produces it"});
      }
    }
  }
  sort_findings(out);
  return out;
}

inline std::vector<Finding> find_unused_resources(const Model& model) {
  std::set<ResourceId> used;
  for (const auto& r : model.responsibilities) {
    for (const auto& n : r.needs) used.insert(n.resource);
    for (const auto& p : r.products) used.insert(p.resource);
    used.insert(r.uses.begin(), r.uses.end());
  }
  std::vector<Finding> out;
  for (const auto& res : model.resources) {
    if (!used.count(res.id)) {
      out.push_back({"UNUSED_RESOURCE", Severity::low, {res.id},
                     std::string(to_string(res.kind)) + " resource \"" + res.name +
                         "\" is not required, produced or used by any responsibility"});
    }
  }
  sort_findings(out);
  return out;
}

/// Channel count where a lone channel with a declared backup partner (in
/// either direction of `backup_of`) counts as two.
inline std::size_t effective_channel_count(const Model& model, const std::vector<ChannelId>& channels) {
  if (channels.size() != 1) return channels.size();
  const auto& only = channels.front();
  const Channel* c = model.find_channel(only);
  if (c && c->backup_of && model.find_channel(*c->backup_of)) return 2;
  const bool has_backup = std::any_of(model.channels.begin(), model.channels.end(),
                                      [&](const Channel& other) { return other.backup_of == only; });
  return has_backup ? 2 : 1;
}

inline std::vector<Finding> find_single_channel(const Model& model) {
  std::vector<Finding> out;
  for (const auto& r : model.responsibilities) {
    for (const auto& n : r.needs) {
      if (effective_channel_count(model, n.channels) == 1) {
        out.push_back({"SINGLE_CHANNEL", Severity::medium, {r.id + "/" + n.resource},
                       "|" + model.resource_name(n.resource) + "| reaches \"" + r.name + "\" only via \"" +
                           model.channel_name(n.channels.front()) + "\" with no backup"});
      }
    }
    for (const auto& p : r.products) {
      if (effective_channel_count(model, p.channels) == 1) {
        out.push_back({"SINGLE_CHANNEL", Severity::medium, {r.id + "/" + p.resource},
                       "|" + model.resource_name(p.resource) + "| leaves \"" + r.name + "\" only via \"" +
                           model.channel_name(p.channels.front()) + "\" with no backup"});
      }
    }
  }
  sort_findings(out);
  return out;
}

inline std::vector<Finding> find_duplicate_sources(const Model& model) {
  // resource -> distinct (sorted) source sets, and resource -> producers
  std::map<ResourceId, std::set<std::vector<AgentId>>> source_sets;
  std::map<ResourceId, std::vector<ResponsibilityId>> producers;
  for (const auto& r : model.responsibilities) {
    for (const auto& n : r.needs) {
      if (n.sources.empty()) continue;
      auto sorted = n.sources;
      std::sort(sorted.begin(), sorted.end());
      source_sets[n.resource].insert(std::move(sorted));
    }
    for (const auto& p : r.products) producers[p.resource].push_back(r.id);
  }

  std::vector<Finding> out;
  for (const auto& res : model.resources) {
    std::vector<std::string> reasons;
    if (auto it = source_sets.find(res.id); it != source_sets.end() && it->second.size() > 1) {
      std::string sets;
      for (const auto& set : it->second) {
        std::string names;
        for (const auto& a : set) names += (names.empty() ? "<" : ", <") + model.agent_name(a) + ">";
        sets += (sets.empty() ? "{" : "; {") + names + "}";
      }
      reasons.push_back("required from differing sources " + sets);
    }
    if (auto it = producers.find(res.id); it != producers.end() && it->second.size() > 1) {
      std::string names;
      for (const auto& id : it->second) names += (names.empty() ? "\"" : ", \"") + model.responsibility_name(id) + "\"";
      reasons.push_back("produced by " + names);
    }
    if (reasons.empty()) continue;
    std::string explanation = "|" + res.name + "| ";
    for (std::size_t i = 0; i < reasons.size(); ++i) explanation += (i ? "; " : "") + reasons[i];
    out.push_back({"DUPLICATE_SOURCE", Severity::low, {res.id}, explanation});
  }
  sort_findings(out);
  return out;
}

inline std::vector<Finding> agent_load(const Model& model, std::size_t threshold = kDefaultLoadThreshold) {
  if (threshold < 1) throw Error("agent load threshold must be at least 1");
  std::vector<Finding> out;
  for (const auto& a : model.agents) {
    const auto count = static_cast<std::size_t>(
        std::count_if(model.responsibilities.begin(), model.responsibilities.end(), [&](const Responsibility& r) {
          return std::find(r.assigned_to.begin(), r.assigned_to.end(), a.id) != r.assigned_to.end();
        }));
    if (count > threshold) {
      out.push_back({"AGENT_OVERLOAD", Severity::medium, {a.id},
                     "<" + a.name + "> holds " + std::to_string(count) + " responsibilities (threshold " +
                         std::to_string(threshold) + ")"});
    }
  }
  sort_findings(out);
  return out;
}

inline std::vector<Finding> detect_sequence_cycles(const Model& model) {
  std::vector<Finding> out;
  for (const auto& cycle : sequence_cycles(model)) {
    std::string names;
    for (const auto& id : cycle) names += (names.empty() ? "\"" : ", \"") + model.responsibility_name(id) + "\"";
    out.push_back({"SEQUENCE_CYCLE", Severity::high, cycle,
                   cycle.size() == 1 ? names + " precedes itself" : "precedes links loop through " + names});
  }
  sort_findings(out);
  return out;
}

struct AnalysisOptions {
  std::size_t load_threshold = kDefaultLoadThreshold;
};

/// Every check in the catalog, merged and sorted.
inline std::vector<Finding> analyze(const Model& model, const AnalysisOptions& options = {}) {
  std::vector<Finding> out;
  for (auto part : {find_unassigned(model), find_unsourced_info(model), find_unused_resources(model),
                    find_single_channel(model), find_duplicate_sources(model),
                    agent_load(model, options.load_threshold), detect_sequence_cycles(model)}) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  sort_findings(out);
  return out;
}

}  // namespace respmod
