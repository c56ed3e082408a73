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

// Resolution of parsed declarations into a Model.
//
// Elements are matched by exact (trimmed) display name. An agent, resource or
// channel first mentioned inside a responsibility is declared implicitly with
// default settings: agents become organizations, resources take the kind of
// the bracket they were written in, channels have no medium. Repeated needs,
// products and hazards of one responsibility are merged, so loading the same
// clause twice is the same as loading it once.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "respmod/declarations.hpp"
#include "respmod/model.hpp"
#include "respmod/slug.hpp"

namespace respmod {

namespace detail {

template <typename T>
void append_unique(std::vector<T>& out, const T& value) {
  if (std::find(out.begin(), out.end(), value) == out.end()) out.push_back(value);
}

template <typename T>
void sort_by_name(std::vector<T>& items) {
  std::stable_sort(items.begin(), items.end(), [](const T& a, const T& b) { return a.name < b.name; });
}

/// Name -> element table for one element kind, tracking slug collisions.
template <typename T>
class Registry {
 public:
  explicit Registry(const char* kind_name) : kind_name_(kind_name) {}

  T* find(const std::string& name) {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &items_[it->second];
  }

  /// Adds a new element named `name`; returns nullptr (after recording an
  /// error) if its id collides with a differently-named element.
  T* add(const std::string& name, const std::optional<SourceSpan>& span, std::vector<BuildError>& errors) {
    std::string id;
    try {
      id = slugify(name);
    } catch (const Error& e) {
      errors.push_back({span, e.what()});
      return nullptr;
    }
    if (auto it = by_slug_.find(id); it != by_slug_.end()) {
      errors.push_back({span, std::string("duplicate ") + kind_name_ + " id '" + id + "' for \"" + name +
                                  "\" and \"" + it->second + "\""});
      return nullptr;
    }
    by_slug_.emplace(id, name);
    by_name_.emplace(name, items_.size());
    T item{};
    item.id = id;
    item.name = name;
    item.origin.span = span;
    items_.push_back(std::move(item));
    return &items_.back();
  }

  std::vector<T> take() { return std::move(items_); }
  const std::vector<T>& items() const { return items_; }

 private:
  const char* kind_name_;
  std::vector<T> items_;
  std::map<std::string, std::size_t> by_name_;
  std::map<std::string, std::string> by_slug_;
};

inline std::optional<SourceSpan> span_of(const NameRef& r) { return r.at.span; }

}  // namespace detail

/// Resolves declarations into a canonical Model. Throws BuildFailure with
/// every semantic error found.
inline Model build_model(const std::vector<Declaration>& declarations) {
  using detail::append_unique;
  using detail::span_of;

  std::vector<BuildError> errors;
  detail::Registry<Agent> agents("agent");
  detail::Registry<Resource> resources("resource");
  detail::Registry<Channel> channels("channel");
  detail::Registry<Responsibility> resps("responsibility");
  std::map<std::string, std::optional<SourceSpan>> channel_backup_spans;
  std::map<std::string, std::string> channel_backup_names;  // channel name -> backup_of name
  std::set<std::string> explicit_agent_kind;

  Model model;
  bool have_model_name = false;

  // Explicit declarations first, so later mentions resolve to them no matter
  // where in the file they appear.
  for (const auto& decl : declarations) {
    if (const auto* m = std::get_if<ModelDecl>(&decl)) {
      if (have_model_name) {
        errors.push_back({m->at.span, "duplicate model declaration \"" + m->name + "\""});
      }
      model.name = m->name;
      have_model_name = true;
    } else if (const auto* a = std::get_if<AgentDecl>(&decl)) {
      Agent* agent = agents.find(a->agent.name);
      if (!agent) agent = agents.add(a->agent.name, span_of(a->agent), errors);
      if (!agent || !a->kind) continue;
      if (explicit_agent_kind.count(agent->name) && agent->kind != *a->kind) {
        errors.push_back({span_of(a->agent), "conflicting agent kind for <" + agent->name + ">: " +
                                                 std::string(to_string(agent->kind)) + " vs " +
                                                 std::string(to_string(*a->kind))});
        continue;
      }
      agent->kind = *a->kind;
      explicit_agent_kind.insert(agent->name);
    } else if (const auto* r = std::get_if<ResourceDecl>(&decl)) {
      if (Resource* existing = resources.find(r->resource.name)) {
        if (existing->kind != r->kind) {
          errors.push_back({span_of(r->resource), "conflicting resource kind for \"" + existing->name + "\": " +
                                                      std::string(to_string(existing->kind)) + " vs " +
                                                      std::string(to_string(r->kind))});
        }
      } else if (Resource* added = resources.add(r->resource.name, span_of(r->resource), errors)) {
        added->kind = r->kind;
      }
    } else if (const auto* c = std::get_if<ChannelDecl>(&decl)) {
      Channel* channel = channels.find(c->channel.name);
      if (!channel) channel = channels.add(c->channel.name, span_of(c->channel), errors);
      if (!channel) continue;
      if (c->medium) {
        if (channel->medium && *channel->medium != *c->medium) {
          errors.push_back({span_of(c->channel), "conflicting medium for channel \"" + channel->name + "\""});
        } else {
          channel->medium = c->medium;
        }
      }
      if (c->backup_of) {
        auto [it, inserted] = channel_backup_names.emplace(channel->name, c->backup_of->name);
        if (!inserted && it->second != c->backup_of->name) {
          errors.push_back({span_of(c->channel), "conflicting backup_of for channel \"" + channel->name + "\""});
        }
        channel_backup_spans.emplace(channel->name, span_of(*c->backup_of));
      }
    } else if (const auto* rd = std::get_if<ResponsibilityDecl>(&decl)) {
      if (resps.find(rd->name.name)) {
        errors.push_back({span_of(rd->name), "duplicate responsibility \"" + rd->name.name + "\""});
        continue;
      }
      resps.add(rd->name.name, span_of(rd->name), errors);
    }
  }

  auto resolve_agent = [&](const NameRef& ref) -> const Agent* {
    if (const Agent* a = agents.find(ref.name)) return a;
    Agent* a = agents.add(ref.name, span_of(ref), errors);
    if (a) a->origin.implicit = true;
    return a;
  };
  auto resolve_resource = [&](const NameRef& ref, ResourceKind kind) -> const Resource* {
    if (const Resource* r = resources.find(ref.name)) {
      if (r->kind != kind) {
        errors.push_back({span_of(ref), "conflicting resource kind for \"" + ref.name + "\": declared " +
                                            std::string(to_string(r->kind)) + ", used as " +
                                            std::string(to_string(kind))});
        return nullptr;
      }
      return r;
    }
    Resource* r = resources.add(ref.name, span_of(ref), errors);
    if (r) {
      r->kind = kind;
      r->origin.implicit = true;
    }
    return r;
  };
  auto resolve_channel = [&](const NameRef& ref) -> const Channel* {
    if (const Channel* c = channels.find(ref.name)) return c;
    Channel* c = channels.add(ref.name, span_of(ref), errors);
    if (c) c->origin.implicit = true;
    return c;
  };

  // Responsibility bodies, in declaration order so implicit elements get
  // deterministic provenance.
  std::vector<std::pair<std::string, std::string>> links;  // (from name, to name)
  std::set<std::string> bodies_done;
  for (const auto& decl : declarations) {
    const auto* rd = std::get_if<ResponsibilityDecl>(&decl);
    if (!rd || !bodies_done.insert(rd->name.name).second) continue;
    Responsibility* resp = resps.find(rd->name.name);
    if (!resp) continue;

    for (const auto& a : rd->assigned_to) {
      if (const Agent* agent = resolve_agent(a)) append_unique(resp->assigned_to, agent->id);
    }
    for (const auto& n : rd->needs) {
      const Resource* res = resolve_resource(n.resource, ResourceKind::information);
      if (!res) continue;
      auto it = std::find_if(resp->needs.begin(), resp->needs.end(),
                             [&](const InfoNeed& x) { return x.resource == res->id; });
      if (it == resp->needs.end()) {
        InfoNeed need;
        need.resource = res->id;
        need.origin.span = span_of(n.resource);
        resp->needs.push_back(std::move(need));
        it = std::prev(resp->needs.end());
      }
      for (const auto& s : n.sources) {
        if (const Agent* agent = resolve_agent(s)) append_unique(it->sources, agent->id);
      }
      for (const auto& c : n.channels) {
        if (const Channel* ch = resolve_channel(c)) append_unique(it->channels, ch->id);
      }
      if (n.criticality && (!it->criticality || *it->criticality < *n.criticality)) it->criticality = n.criticality;
    }
    for (const auto& p : rd->products) {
      const Resource* res = resolve_resource(p.resource, ResourceKind::information);
      if (!res) continue;
      auto it = std::find_if(resp->products.begin(), resp->products.end(),
                             [&](const InfoProduct& x) { return x.resource == res->id; });
      if (it == resp->products.end()) {
        InfoProduct product;
        product.resource = res->id;
        product.origin.span = span_of(p.resource);
        resp->products.push_back(std::move(product));
        it = std::prev(resp->products.end());
      }
      for (const auto& c : p.channels) {
        if (const Channel* ch = resolve_channel(c)) append_unique(it->channels, ch->id);
      }
      if (p.rationale && !it->rationale) it->rationale = p.rationale;
    }
    for (const auto& u : rd->uses) {
      if (const Resource* res = resolve_resource(u, ResourceKind::physical)) append_unique(resp->uses, res->id);
    }
    for (const auto& target : rd->precedes) links.emplace_back(resp->name, target.name);
    for (const auto& note : rd->notes) append_unique(resp->notes, note);

    for (const auto& h : rd->hazards) {
      const Resource* res = resolve_resource(h.item, ResourceKind::information);
      if (!res) continue;
      if (!resp->find_need(res->id) && !resp->find_product(res->id)) {
        errors.push_back({h.at.span, "hazard for |" + res->name + "| which \"" + resp->name +
                                         "\" neither requires nor produces"});
        continue;
      }
      auto it = std::find_if(resp->hazards.begin(), resp->hazards.end(), [&](const HazardEntry& x) {
        return x.item == res->id && x.guide_word == h.guide_word;
      });
      if (it == resp->hazards.end()) {
        HazardEntry entry;
        entry.responsibility = resp->id;
        entry.item = res->id;
        entry.guide_word = h.guide_word;
        entry.origin.span = h.at.span;
        resp->hazards.push_back(std::move(entry));
        it = std::prev(resp->hazards.end());
      }
      // Merging never overwrites an existing assessment.
      if (it->consequence.empty()) it->consequence = h.consequence;
      if (h.severity && it->severity < *h.severity) it->severity = *h.severity;
      if (!it->mitigation) it->mitigation = h.mitigation;
    }
  }

  for (const auto& [from, to] : links) {
    const Responsibility* target = resps.find(to);
    if (!target) {
      errors.push_back({std::nullopt, "\"" + from + "\" precedes unknown responsibility \"" + to + "\""});
      continue;
    }
    SequenceLink link{resps.find(from)->id, target->id};
    append_unique(model.sequence_links, link);
  }

  // Channel backups: must resolve, must not point at themselves, and must not
  // form a cycle.
  for (const auto& [name, backup_name] : channel_backup_names) {
    Channel* channel = channels.find(name);
    const Channel* backup = channels.find(backup_name);
    const auto span = channel_backup_spans[name];
    if (!channel) continue;
    if (!backup) {
      errors.push_back({span, "channel \"" + name + "\" is backup_of unknown channel \"" + backup_name + "\""});
    } else if (backup == channel) {
      errors.push_back({span, "channel \"" + name + "\" cannot be its own backup"});
    } else {
      channel->backup_of = backup->id;
    }
  }
  for (const auto& start : channels.items()) {
    std::set<std::string> seen{start.id};
    std::optional<std::string> next = start.backup_of;
    while (next) {
      if (!seen.insert(*next).second) {
        if (*next == start.id) {
          errors.push_back({start.origin.span, "backup_of cycle through channel \"" + start.name + "\""});
        }
        break;
      }
      const Channel* c = nullptr;
      for (const auto& x : channels.items())
        if (x.id == *next) c = &x;
      next = c ? c->backup_of : std::nullopt;
    }
  }

  if (!errors.empty()) throw BuildFailure(std::move(errors));

  model.agents = agents.take();
  model.resources = resources.take();
  model.channels = channels.take();
  model.responsibilities = resps.take();
  detail::sort_by_name(model.agents);
  detail::sort_by_name(model.resources);
  detail::sort_by_name(model.channels);
  detail::sort_by_name(model.responsibilities);

  auto resource_order = [&](const ResourceId& a, const ResourceId& b) {
    return model.resource_name(a) < model.resource_name(b);
  };
  for (auto& r : model.responsibilities) {
    std::stable_sort(r.needs.begin(), r.needs.end(),
                     [&](const InfoNeed& a, const InfoNeed& b) { return resource_order(a.resource, b.resource); });
    std::stable_sort(r.products.begin(), r.products.end(), [&](const InfoProduct& a, const InfoProduct& b) {
      return resource_order(a.resource, b.resource);
    });
    std::stable_sort(r.hazards.begin(), r.hazards.end(), [&](const HazardEntry& a, const HazardEntry& b) {
      if (a.item != b.item) return resource_order(a.item, b.item);
      return a.guide_word < b.guide_word;
    });
  }
  std::stable_sort(model.sequence_links.begin(), model.sequence_links.end(),
                   [&](const SequenceLink& a, const SequenceLink& b) {
                     return std::pair(model.responsibility_name(a.from), model.responsibility_name(a.to)) <
                            std::pair(model.responsibility_name(b.from), model.responsibility_name(b.to));
                   });
  return model;
}

/// Inverse of build_model(): declarations that rebuild `model`. With
/// `include_implicit` false, implicitly declared elements are left to be
/// re-implied by their mentions so provenance survives a rebuild.
inline std::vector<Declaration> to_declarations(const Model& model, bool include_implicit = true) {
  std::vector<Declaration> out;
  out.emplace_back(ModelDecl{model.name, {}});
  for (const auto& a : model.agents) {
    if (include_implicit || !a.origin.implicit) out.emplace_back(AgentDecl{NameRef{a.name, {}}, a.kind});
  }
  for (const auto& r : model.resources) {
    if (include_implicit || !r.origin.implicit) out.emplace_back(ResourceDecl{NameRef{r.name, {}}, r.kind});
  }
  for (const auto& c : model.channels) {
    if (!include_implicit && c.origin.implicit) continue;
    ChannelDecl d{NameRef{c.name, {}}, c.medium, std::nullopt};
    if (c.backup_of) d.backup_of = NameRef{model.channel_name(*c.backup_of), {}};
    out.emplace_back(std::move(d));
  }

  auto names = [](const std::vector<std::string>& ids, auto&& lookup) {
    std::vector<NameRef> refs;
    refs.reserve(ids.size());
    for (const auto& id : ids) refs.push_back(NameRef{lookup(id), {}});
    return refs;
  };
  auto agent_name = [&](const std::string& id) { return model.agent_name(id); };
  auto channel_name = [&](const std::string& id) { return model.channel_name(id); };
  auto resource_name = [&](const std::string& id) { return model.resource_name(id); };

  for (const auto& r : model.responsibilities) {
    ResponsibilityDecl d;
    d.name = NameRef{r.name, {}};
    d.assigned_to = names(r.assigned_to, agent_name);
    for (const auto& n : r.needs) {
      d.needs.push_back(NeedDecl{NameRef{resource_name(n.resource), {}}, names(n.sources, agent_name),
                                 names(n.channels, channel_name), n.criticality});
    }
    for (const auto& p : r.products) {
      d.products.push_back(ProductDecl{NameRef{resource_name(p.resource), {}}, names(p.channels, channel_name),
                                       p.rationale});
    }
    d.uses = names(r.uses, resource_name);
    for (const auto& link : model.sequence_links) {
      if (link.from == r.id) d.precedes.push_back(NameRef{model.responsibility_name(link.to), {}});
    }
    d.notes = r.notes;
    for (const auto& h : r.hazards) {
      HazardDecl hd;
      hd.item = NameRef{resource_name(h.item), {}};
      hd.guide_word = h.guide_word;
      hd.consequence = h.consequence;
      if (h.severity != Severity::none) hd.severity = h.severity;
      hd.mitigation = h.mitigation;
      d.hazards.push_back(std::move(hd));
    }
    out.emplace_back(std::move(d));
  }
  return out;
}

}  // namespace respmod
