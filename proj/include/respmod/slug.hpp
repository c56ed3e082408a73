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

#include "respmod/error.hpp"

namespace respmod {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

/// Lowercases ASCII letters and collapses every run of other ASCII characters
/// into a single hyphen. Bytes >= 0x80 (UTF-8 sequences) are kept verbatim so
/// non-English names still produce distinct ids.
inline std::string slugify(std::string_view name) {
  const auto body = trim(name);
  if (body.empty()) throw Error("cannot derive an id from an empty name");

  std::string out;
  out.reserve(body.size());
  bool pending_hyphen = false;
  for (const char raw : body) {
    const auto c = static_cast<unsigned char>(raw);
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                      c >= 0x80;
    if (!keep) {
      pending_hyphen = true;
      continue;
    }
    if (pending_hyphen && !out.empty()) out += '-';
    pending_hyphen = false;
    out += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : raw;
  }
  if (out.empty()) {
    throw Error("name '" + std::string(body) + "' has no letters or digits to form an id");
  }
  return out;
}

}  // namespace respmod
