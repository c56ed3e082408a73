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

// Comparison of two organizations' models of the same system. Responsibilities
// are matched by exact display name; agents, resources and channels are
// compared by display name, never by id, since the two models are authored
// independently.

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "respmod/model.hpp"

namespace respmod {

enum class InconsistencyKind { MissingResponsibility, AssignmentMismatch, SourceMismatch, ChannelMismatch };

inline constexpr std::array<std::string_view, 4> kInconsistencyNames = {
    "MissingResponsibility", "AssignmentMismatch", "SourceMismatch", "ChannelMismatch"};

inline std::string_view to_string(InconsistencyKind k) { return kInconsistencyNames[static_cast<int>(k)]; }

/// Fixed severity per kind, used for `--fail-level` filtering.
inline Severity severity_of(InconsistencyKind k) {
  switch (k) {
    case InconsistencyKind::MissingResponsibility:
    case InconsistencyKind::AssignmentMismatch: return Severity::high;
    case InconsistencyKind::SourceMismatch: return Severity::medium;
    case InconsistencyKind::ChannelMismatch: return Severity::low;
  }
  return Severity::none;
}

struct PerceptionInconsistency {
  InconsistencyKind kind = InconsistencyKind::MissingResponsibility;
  std::string responsibility;
  std::string item;      // information resource name for source/channel mismatches
  bool product = false;  // channel mismatch on a produced item rather than a need
  std::string left;
  std::string right;

  bool operator==(const PerceptionInconsistency&) const = default;

  std::string render() const {
    return std::string(to_string(kind)) + " \"" + responsibility + "\": left " + left + "; right " + right;
  }
};

namespace detail {

inline std::vector<std::string> sorted_names(const std::vector<std::string>& ids, auto&& lookup) {
  std::vector<std::string> out;
  for (const auto& id : ids) out.push_back(lookup(id));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::string describe_set(const std::vector<std::string>& names, char open, char close, const char* empty) {
  if (names.empty()) return empty;
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += open + n + close;
  }
  return out;
}

struct FlowView {
  std::vector<std::string> sources;
  std::vector<std::string> channels;
};

inline std::map<std::string, FlowView> needs_by_name(const Model& m, const Responsibility& r) {
  std::map<std::string, FlowView> out;
  for (const auto& n : r.needs) {
    out[m.resource_name(n.resource)] = {sorted_names(n.sources, [&](const auto& id) { return m.agent_name(id); }),
                                        sorted_names(n.channels, [&](const auto& id) { return m.channel_name(id); })};
  }
  return out;
}

inline std::map<std::string, std::vector<std::string>> products_by_name(const Model& m, const Responsibility& r) {
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& p : r.products) {
    out[m.resource_name(p.resource)] =
        sorted_names(p.channels, [&](const auto& id) { return m.channel_name(id); });
  }
  return out;
}

}  // namespace detail

/// Differences in how `left` and `right` perceive shared responsibilities.
/// diff_models(b, a) yields the same entries as diff_models(a, b), in the same
/// order, with left and right swapped.
inline std::vector<PerceptionInconsistency> diff_models(const Model& left, const Model& right) {
  using detail::describe_set;
  std::vector<PerceptionInconsistency> out;

  std::set<std::string> names;
  for (const auto& r : left.responsibilities) names.insert(r.name);
  for (const auto& r : right.responsibilities) names.insert(r.name);

  for (const auto& name : names) {
    const Responsibility* l = left.find_responsibility_by_name(name);
    const Responsibility* r = right.find_responsibility_by_name(name);
    if (!l || !r) {
      out.push_back({InconsistencyKind::MissingResponsibility, name, {}, false, l ? "present" : "absent",
                     r ? "present" : "absent"});
      continue;
    }

    const auto la = detail::sorted_names(l->assigned_to, [&](const auto& id) { return left.agent_name(id); });
    const auto ra = detail::sorted_names(r->assigned_to, [&](const auto& id) { return right.agent_name(id); });
    if (la != ra) {
      out.push_back({InconsistencyKind::AssignmentMismatch, name, {}, false, describe_set(la, '<', '>', "(unassigned)"),
                     describe_set(ra, '<', '>', "(unassigned)")});
    }

    const auto ln = detail::needs_by_name(left, *l);
    const auto rn = detail::needs_by_name(right, *r);
    std::set<std::string> items;
    for (const auto& [k, v] : ln) items.insert(k);
    for (const auto& [k, v] : rn) items.insert(k);
    for (const auto& item : items) {
      const auto li = ln.find(item);
      const auto ri = rn.find(item);
      const std::string label = "|" + item + "|";
      if (li == ln.end() || ri == rn.end()) {
        auto side = [&](auto it, const auto& map) {
          return it == map.end() ? label + " not required"
                                 : label + " from " + describe_set(it->second.sources, '<', '>', "(no source)");
        };
        out.push_back({InconsistencyKind::SourceMismatch, name, item, false, side(li, ln), side(ri, rn)});
        continue;
      }
      if (li->second.sources != ri->second.sources) {
        out.push_back({InconsistencyKind::SourceMismatch, name, item, false,
                       label + " from " + describe_set(li->second.sources, '<', '>', "(no source)"),
                       label + " from " + describe_set(ri->second.sources, '<', '>', "(no source)")});
      }
      if (li->second.channels != ri->second.channels) {
        out.push_back({InconsistencyKind::ChannelMismatch, name, item, false,
                       label + " via " + describe_set(li->second.channels, '"', '"', "(no channel)"),
                       label + " via " + describe_set(ri->second.channels, '"', '"', "(no channel)")});
      }
    }

    // Products present on both sides are compared on channels only.
    const auto lp = detail::products_by_name(left, *l);
    const auto rp = detail::products_by_name(right, *r);
    for (const auto& [item, lc] : lp) {
      const auto it = rp.find(item);
      if (it == rp.end() || it->second == lc) continue;
      const std::string label = "|" + item + "| produced";
      out.push_back({InconsistencyKind::ChannelMismatch, name, item, true,
                     label + " via " + describe_set(lc, '"', '"', "(no channel)"),
                     label + " via " + describe_set(it->second, '"', '"', "(no channel)")});
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.responsibility, a.kind, a.item, a.product) < std::tie(b.responsibility, b.kind, b.item, b.product);
  });
  return out;
}

}  // namespace respmod
