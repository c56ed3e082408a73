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

// Information-hazard worksheets: every information item a responsibility
// requires, crossed with the five guide words. Products are not analysed here;
// their hazards belong to the consuming responsibility's worksheet.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "respmod/declarations.hpp"
#include "respmod/model.hpp"
#include "respmod/slug.hpp"

namespace respmod {

struct Worksheet {
  std::string responsibility;
  std::vector<HazardEntry> rows;  // needs x guide words, canonical order
};

inline Worksheet generate_worksheet(const Model& model, std::string_view responsibility) {
  const Responsibility& resp = require_responsibility(model, responsibility);
  Worksheet w{resp.name, {}};
  w.rows.reserve(resp.needs.size() * kGuideWords.size());
  for (const auto& need : resp.needs) {
    for (const auto word : kGuideWords) {
      if (const auto* existing = resp.find_hazard(need.resource, word)) {
        w.rows.push_back(*existing);
      } else {
        HazardEntry blank;
        blank.responsibility = resp.id;
        blank.item = need.resource;
        blank.guide_word = word;
        w.rows.push_back(std::move(blank));
      }
    }
  }
  return w;
}

inline std::string mitigation_id(const Responsibility& resp, const HazardEntry& h) {
  return "MIT-" + resp.id + "-" + h.item + "-" + std::string(to_string(h.guide_word));
}

/// Requirement stubs for assessed hazards at or above `threshold` that have no
/// mitigation linked yet, in worksheet order.
inline std::vector<RequirementRecord> derive_mitigations(const Model& model, std::string_view responsibility,
                                                         Severity threshold = Severity::medium) {
  const Responsibility& resp = require_responsibility(model, responsibility);
  std::vector<RequirementRecord> out;
  for (const auto& h : resp.hazards) {
    if (!h.assessed() || h.severity < threshold || h.mitigation) continue;
    const auto item = model.resource_name(h.item);
    const auto word = std::string(to_string(h.guide_word));

    TraceRef hazard{TraceKind::hazard, item, h.guide_word, {}};
    RequirementRecord stub;
    stub.id = mitigation_id(resp, h);
    stub.text = "Coping requirement for \"" + resp.name + "\" when |" + item + "| is " + word +
                ". Consequence to mitigate: " + h.consequence;
    stub.rationale = "Derived from a " + std::string(to_string(h.severity)) +
                     "-severity information hazard with no mitigation linked.";
    stub.traces = {TraceRef{TraceKind::responsibility, resp.name, std::nullopt, {}}, hazard};
    stub.derived_from = hazard;
    out.push_back(std::move(stub));
  }
  return out;
}

/// Copy of `model` in which each stub's source hazard is linked to the stub id.
inline Model link_mitigations(const Model& model, std::string_view responsibility,
                              const std::vector<RequirementRecord>& stubs) {
  Model out = model;
  for (auto& resp : out.responsibilities) {
    if (resp.name != responsibility) continue;
    for (const auto& stub : stubs) {
      if (!stub.derived_from || !stub.derived_from->guide_word) continue;
      for (auto& h : resp.hazards) {
        if (out.resource_name(h.item) == stub.derived_from->name && h.guide_word == *stub.derived_from->guide_word &&
            !h.mitigation) {
          h.mitigation = stub.id;
        }
      }
    }
  }
  return out;
}

/// Fraction of worksheet rows with a recorded consequence. A worksheet with no
/// rows is complete by convention.
inline double coverage(const Model& model, std::string_view responsibility) {
  const auto w = generate_worksheet(model, responsibility);
  if (w.rows.empty()) return 1.0;
  std::size_t assessed = 0;
  for (const auto& row : w.rows) assessed += row.assessed() ? 1 : 0;
  return static_cast<double>(assessed) / static_cast<double>(w.rows.size());
}

}  // namespace respmod
