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

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "respmod/model.hpp"

namespace respmod {

/// Responsibility ids caught in a `precedes` cycle: every strongly connected
/// component with at least two members, plus self-loops. Members of each
/// group keep the model's canonical order; groups are ordered by their first
/// member.
inline std::vector<std::vector<ResponsibilityId>> sequence_cycles(const Model& model) {
  const auto& resps = model.responsibilities;
  const std::size_t n = resps.size();
  auto index_of = [&](const ResponsibilityId& id) {
    return static_cast<std::size_t>(
        std::find_if(resps.begin(), resps.end(), [&](const Responsibility& r) { return r.id == id; }) -
        resps.begin());
  };

  std::vector<std::vector<std::size_t>> adjacent(n);
  std::vector<bool> self_loop(n, false);
  for (const auto& link : model.sequence_links) {
    const auto from = index_of(link.from);
    const auto to = index_of(link.to);
    if (from >= n || to >= n) continue;
    if (from == to) self_loop[from] = true;
    adjacent[from].push_back(to);
  }

  // Tarjan's algorithm.
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  std::vector<std::vector<std::size_t>> components;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (const auto w : adjacent[v]) {
      if (index[w] == unvisited) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> component;
      std::size_t w = 0;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      if (component.size() >= 2 || self_loop[v]) components.push_back(std::move(component));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] == unvisited) visit(v);
  }

  for (auto& c : components) std::sort(c.begin(), c.end());
  std::sort(components.begin(), components.end());
  std::vector<std::vector<ResponsibilityId>> out;
  for (const auto& c : components) {
    std::vector<ResponsibilityId> ids;
    for (const auto i : c) ids.push_back(resps[i].id);
    out.push_back(std::move(ids));
  }
  return out;
}

}  // namespace respmod
