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

#include <fstream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "respmod/build.hpp"
#include "respmod/cli.hpp"
#include "respmod/parser.hpp"

namespace respmod::testing {

inline std::string corpus(const std::string& name) { return std::string(RESPMOD_CORPUS_DIR) + "/" + name; }
inline std::string golden(const std::string& name) { return std::string(RESPMOD_GOLDEN_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline Model load(const std::string& path) { return build_model(parse_model(slurp(path), path)); }

inline Model load_text(const std::string& text) { return build_model(parse_model(text, "test.resp")); }

struct CliResult {
  int status = -1;
  std::string out;
  std::string err;
};

inline CliResult run_cli(std::vector<std::string> args, const std::string& stdin_text = {}) {
  args.insert(args.begin(), "respmod");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  CliResult r;
  r.status = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// ---------------------------------------------------------------------------
// Random model declarations for property tests.

class ModelGenerator {
 public:
  explicit ModelGenerator(unsigned seed) : rng_(seed) {}

  std::vector<Declaration> declarations() {
    used_ = {"agent:mutation-agent", "channel:mutation-channel"};
    std::vector<Declaration> out;
    if (chance(0.8)) out.emplace_back(ModelDecl{name(kAnyText), {}});

    const auto agents = names(uniform(0, 6), kAgentText, "agent");
    const auto infos = names(uniform(0, 7), kInfoText, "resource");
    const auto physicals = names(uniform(0, 3), kPhysText, "resource");
    const auto channels = names(uniform(0, 5), kAnyText, "channel");
    const auto resps = names(uniform(0, 6), kAnyText, "responsibility");

    // Some elements stay undeclared so they are implied by their mentions.
    for (const auto& a : agents) {
      if (chance(0.7)) {
        std::optional<AgentKind> kind;
        if (chance(0.6)) kind = static_cast<AgentKind>(uniform(0, 4));
        out.emplace_back(AgentDecl{NameRef{a, {}}, kind});
      }
    }
    for (const auto& r : infos)
      if (chance(0.7)) out.emplace_back(ResourceDecl{NameRef{r, {}}, ResourceKind::information});
    for (const auto& r : physicals)
      if (chance(0.7)) out.emplace_back(ResourceDecl{NameRef{r, {}}, ResourceKind::physical});
    std::vector<std::string> declared_channels;
    for (const auto& c : channels) {
      if (!chance(0.7)) continue;
      ChannelDecl d{NameRef{c, {}}, std::nullopt, std::nullopt};
      if (chance(0.5)) d.medium = pick(std::vector<std::string>{"radio", "sms", "email", "fax", "verbal", "data-link"});
      // Backups only point at earlier declared channels, which keeps chains acyclic.
      if (!declared_channels.empty() && chance(0.3)) d.backup_of = NameRef{pick(declared_channels), {}};
      declared_channels.push_back(c);
      out.emplace_back(std::move(d));
    }

    for (const auto& r : resps) {
      ResponsibilityDecl d;
      d.name = NameRef{r, {}};
      for (const auto& a : subset(agents, 0.3)) d.assigned_to.push_back(NameRef{a, {}});
      for (const auto& info : subset(infos, 0.35)) {
        NeedDecl n;
        n.resource = NameRef{info, {}};
        for (const auto& a : subset(agents, 0.25)) n.sources.push_back(NameRef{a, {}});
        for (const auto& c : subset(channels, 0.3)) n.channels.push_back(NameRef{c, {}});
        if (chance(0.3)) n.criticality = static_cast<Severity>(uniform(0, 4));
        d.needs.push_back(std::move(n));
        if (chance(0.15)) d.needs.push_back(d.needs.back());  // duplicate clause, merged on load
      }
      for (const auto& info : subset(infos, 0.25)) {
        ProductDecl p;
        p.resource = NameRef{info, {}};
        for (const auto& c : subset(channels, 0.3)) p.channels.push_back(NameRef{c, {}});
        if (chance(0.5)) p.rationale = name(kAnyText);
        d.products.push_back(std::move(p));
      }
      for (const auto& phys : subset(physicals, 0.3)) d.uses.push_back(NameRef{phys, {}});
      for (const auto& other : subset(resps, 0.15)) d.precedes.push_back(NameRef{other, {}});
      if (chance(0.3)) d.notes.push_back(name(kAnyText));
      for (const auto& n : d.needs) {
        for (const auto word : kGuideWords) {
          if (!chance(0.2)) continue;
          HazardDecl h;
          h.item = n.resource;
          h.guide_word = word;
          h.consequence = chance(0.8) ? name(kAnyText) : std::string();
          if (chance(0.7)) h.severity = static_cast<Severity>(uniform(1, 4));
          if (chance(0.2)) h.mitigation = "REQ-" + std::to_string(uniform(1, 99));
          d.hazards.push_back(std::move(h));
        }
      }
      out.emplace_back(std::move(d));
    }
    return out;
  }

  Model model() { return build_model(declarations()); }

  /// A perturbed copy: some responsibilities lose an agent, a source, or gain
  /// a channel; one may be dropped. The result still builds.
  std::vector<Declaration> mutate(std::vector<Declaration> decls) {
    std::vector<Declaration> out;
    for (auto& d : decls) {
      auto* r = std::get_if<ResponsibilityDecl>(&d);
      if (r && chance(0.1)) continue;  // the other side does not know this one
      if (r && chance(0.5)) {
        if (!r->assigned_to.empty() && chance(0.5)) r->assigned_to.pop_back();
        if (chance(0.3)) r->assigned_to.push_back(NameRef{"Mutation agent", {}});
        if (!r->needs.empty()) {
          auto& n = r->needs[static_cast<std::size_t>(uniform(0, static_cast<int>(r->needs.size()) - 1))];
          if (chance(0.5)) n.sources.clear();
          if (chance(0.5)) n.channels.push_back(NameRef{"Mutation channel", {}});
        }
        for (auto& p : r->products)
          if (chance(0.3)) p.channels.push_back(NameRef{"Mutation channel", {}});
      }
      out.push_back(std::move(d));
    }
    // Precedes links into dropped responsibilities would no longer resolve.
    std::set<std::string> kept;
    for (const auto& d : out)
      if (const auto* r = std::get_if<ResponsibilityDecl>(&d)) kept.insert(r->name.name);
    for (auto& d : out) {
      if (auto* r = std::get_if<ResponsibilityDecl>(&d)) {
        std::erase_if(r->precedes, [&](const NameRef& p) { return !kept.count(p.name); });
      }
    }
    return out;
  }

  std::mt19937& rng() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  // Character pools; each excludes the closing delimiter of its notation.
  static constexpr const char* kAgentText = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 &'(),./-|[]#";
  static constexpr const char* kInfoText = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 &'(),./-<>[]#";
  static constexpr const char* kPhysText = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 &'(),./-<>|#";
  static constexpr const char* kAnyText =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 &'(),./-<>|[]#\"\\{}";

  std::string name(const char* pool) {
    const std::string chars(pool);
    for (;;) {
      std::string s;
      const int len = uniform(1, 24);
      for (int i = 0; i < len; ++i) s += chars[static_cast<std::size_t>(uniform(0, static_cast<int>(chars.size()) - 1))];
      const auto t = std::string(trim(s));
      if (t.empty()) continue;
      try {
        slugify(t);
      } catch (const Error&) {
        continue;
      }
      return t;
    }
  }

  std::vector<std::string> names(int count, const char* pool, const std::string& kind) {
    std::vector<std::string> out;
    while (static_cast<int>(out.size()) < count) {
      auto n = name(pool);
      if (used_.insert(kind + ":" + slugify(n)).second) out.push_back(std::move(n));
    }
    return out;
  }

  std::vector<std::string> subset(const std::vector<std::string>& from, double p) {
    std::vector<std::string> out;
    for (const auto& x : from)
      if (chance(p)) out.push_back(x);
    std::shuffle(out.begin(), out.end(), rng_);
    return out;
  }

  std::mt19937 rng_;
  std::set<std::string> used_;
};

}  // namespace respmod::testing
