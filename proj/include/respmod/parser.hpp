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

// Recursive-descent parsers for the three text formats:
//
//   .resp     responsibility models
//   .answers  structured elicitation answers
//   .reqs     authored requirements with trace links
//
// All three share one lexer. Each parser recovers at the next top-level
// keyword after an error, so one bad declaration does not hide problems in
// the ones after it. Any error makes the whole parse throw ParseFailure.

#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "respmod/declarations.hpp"
#include "respmod/lexer.hpp"

namespace respmod {

namespace dsl {

inline std::string guide_word_list() {
  std::string out;
  for (const auto w : kGuideWordNames) {
    if (!out.empty()) out += ", ";
    out += w;
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const std::string& file) {
    auto lexed = tokenize(text, file);
    tokens_ = std::move(lexed.tokens);
    errors_ = std::move(lexed.errors);
  }

  std::vector<Declaration> model_file() {
    std::vector<Declaration> out;
    top_level({"model", "agent", "resource", "channel", "responsibility"}, [&] {
      const Token& kw = peek();
      if (kw.text == "model") {
        advance();
        out.emplace_back(ModelDecl{expect_string("model name"), Where{kw.span}});
      } else if (kw.text == "agent") {
        advance();
        AgentDecl d{expect_ref(TokenKind::agent_ref, "agent name in '<...>'"), std::nullopt};
        if (accept_word("kind")) d.kind = agent_kind();
        out.emplace_back(std::move(d));
      } else if (kw.text == "resource") {
        advance();
        const Token& t = peek();
        if (t.kind == TokenKind::phys_ref || t.kind == TokenKind::info_ref) {
          advance();
          out.emplace_back(ResourceDecl{NameRef{t.text, Where{t.span}},
                                        t.kind == TokenKind::phys_ref ? ResourceKind::physical
                                                                      : ResourceKind::information});
        } else {
          fail(t, "resource name in '[...]' or '|...|'");
        }
      } else if (kw.text == "channel") {
        advance();
        ChannelDecl d{string_ref("channel name"), std::nullopt, std::nullopt};
        if (accept_word("medium")) d.medium = expect_word("channel medium");
        if (accept_word("backup_of")) d.backup_of = string_ref("backup channel name");
        out.emplace_back(std::move(d));
      } else {
        out.emplace_back(responsibility());
      }
    });
    finish();
    return out;
  }

  std::vector<ElicitationRecord> answers_file() {
    std::vector<ElicitationRecord> out;
    top_level({"elicitation"}, [&] {
      const Token& kw = advance();
      ElicitationRecord rec;
      rec.at = Where{kw.span};
      rec.responsibility = expect_string("responsibility name");
      for (;;) {
        if (accept_word("by")) {
          rec.by = expect_string("interviewer name after 'by'");
        } else if (accept_word("date")) {
          rec.date = expect_string("date after 'date'");
        } else {
          break;
        }
      }
      expect(TokenKind::lbrace, "'{'");
      while (!check(TokenKind::rbrace)) {
        const Token& t = peek();
        if (t.kind == TokenKind::end) fail(t, "'}'");
        if (t.kind != TokenKind::word) fail(t, "'needs', 'records' or 'hazards'");
        if (t.text == "needs") {
          advance();
          expect(TokenKind::lbrace, "'{'");
          while (!accept(TokenKind::rbrace)) rec.needs.push_back(need_line(/*in_answers=*/true));
        } else if (t.text == "records") {
          advance();
          expect(TokenKind::lbrace, "'{'");
          while (!accept(TokenKind::rbrace)) rec.records.push_back(product_line());
        } else if (t.text == "hazards") {
          advance();
          const NameRef item = expect_ref(TokenKind::info_ref, "information item in '|...|'");
          expect(TokenKind::lbrace, "'{'");
          while (!accept(TokenKind::rbrace)) {
            HazardDecl h;
            h.item = item;
            h.at = Where{peek().span};
            h.guide_word = guide_word();
            h.consequence = expect_string("consequence text");
            if (accept_word("severity")) h.severity = severity();
            rec.hazards.push_back(std::move(h));
          }
        } else {
          fail(t, "'needs', 'records' or 'hazards'");
        }
      }
      advance();
      out.push_back(std::move(rec));
    });
    finish();
    return out;
  }

  std::vector<RequirementRecord> requirements_file() {
    std::vector<RequirementRecord> out;
    std::set<std::string> seen;
    top_level({"requirement"}, [&] {
      advance();
      RequirementRecord req;
      const Token& id = peek();
      req.id = expect_word("requirement id");
      req.at = Where{id.span};
      expect(TokenKind::lbrace, "'{'");
      expect_keyword("text");
      req.text = expect_string("requirement text");
      if (trim(req.text).empty()) fail(id, "non-empty requirement text", "empty text");
      expect_keyword("rationale");
      req.rationale = expect_string("rationale text");
      while (accept_word("traces")) req.traces.push_back(trace());
      if (!check(TokenKind::rbrace)) fail(peek(), "'traces' or '}'");
      advance();
      if (!seen.insert(req.id).second) fail(id, "a unique requirement id", "duplicate id '" + req.id + "'");
      out.push_back(std::move(req));
    });
    finish();
    return out;
  }

 private:
  struct Stop {};

  template <typename Body>
  void top_level(std::initializer_list<std::string_view> keywords, Body body) {
    auto is_keyword = [&](const Token& t) {
      if (t.kind != TokenKind::word) return false;
      for (const auto k : keywords)
        if (t.text == k) return true;
      return false;
    };
    while (peek().kind != TokenKind::end) {
      try {
        if (!is_keyword(peek())) {
          std::string expected = "one of";
          bool first = true;
          for (const auto k : keywords) {
            expected += (first ? " '" : ", '") + std::string(k) + "'";
            first = false;
          }
          fail(peek(), expected);
        }
        body();
      } catch (const Stop&) {
        // Resynchronise at the next top-level keyword.
        advance();
        while (peek().kind != TokenKind::end && !is_keyword(peek())) advance();
      }
    }
  }

  ResponsibilityDecl responsibility() {
    advance();
    ResponsibilityDecl d;
    d.name = string_ref("responsibility name");
    expect(TokenKind::lbrace, "'{'");
    for (;;) {
      const Token& t = peek();
      if (t.kind == TokenKind::rbrace) {
        advance();
        return d;
      }
      if (t.kind == TokenKind::end) fail(t, "'}'");
      if (t.kind != TokenKind::word) fail(t, "a responsibility item");
      if (t.text == "responsibility") fail(t, "'}' before the next responsibility", "nested responsibility block");
      if (t.text == "assigned") {
        advance();
        expect_keyword("to");
        d.assigned_to.push_back(expect_ref(TokenKind::agent_ref, "agent name in '<...>'"));
        while (accept(TokenKind::comma)) d.assigned_to.push_back(expect_ref(TokenKind::agent_ref, "agent name in '<...>'"));
      } else if (t.text == "requires") {
        advance();
        d.needs.push_back(need_line(/*in_answers=*/false));
      } else if (t.text == "produces") {
        advance();
        d.products.push_back(product_line());
      } else if (t.text == "uses") {
        advance();
        d.uses.push_back(expect_ref(TokenKind::phys_ref, "physical resource name in '[...]'"));
      } else if (t.text == "precedes") {
        advance();
        d.precedes.push_back(string_ref("responsibility name"));
      } else if (t.text == "note") {
        advance();
        d.notes.push_back(expect_string("note text"));
      } else if (t.text == "hazard") {
        advance();
        HazardDecl h;
        h.at = Where{t.span};
        h.item = expect_ref(TokenKind::info_ref, "information item in '|...|'");
        h.guide_word = guide_word();
        h.consequence = expect_string("consequence text");
        if (accept_word("severity")) h.severity = severity();
        if (accept_word("mitigation")) h.mitigation = expect_word("requirement id");
        d.hazards.push_back(std::move(h));
      } else {
        fail(t, "one of 'assigned', 'requires', 'produces', 'uses', 'precedes', 'note', 'hazard'",
             "unknown keyword '" + t.text + "'");
      }
    }
  }

  NeedDecl need_line(bool in_answers) {
    NeedDecl n;
    n.resource = expect_ref(TokenKind::info_ref, "information resource in '|...|'");
    if (accept_word("from")) {
      n.sources.push_back(expect_ref(TokenKind::agent_ref, "agent name in '<...>'"));
      while (accept(TokenKind::comma)) n.sources.push_back(expect_ref(TokenKind::agent_ref, "agent name in '<...>'"));
    }
    if (accept_word("via")) n.channels = string_list("channel name");
    if (!in_answers && accept_word("criticality")) n.criticality = severity();
    return n;
  }

  ProductDecl product_line() {
    ProductDecl p;
    p.resource = expect_ref(TokenKind::info_ref, "information resource in '|...|'");
    if (accept_word("via")) p.channels = string_list("channel name");
    if (accept_word("rationale")) p.rationale = expect_string("rationale text");
    return p;
  }

  TraceRef trace() {
    const Token& t = peek();
    TraceRef r;
    r.at = Where{t.span};
    if (t.kind == TokenKind::info_ref || t.kind == TokenKind::agent_ref) {
      advance();
      r.kind = t.kind == TokenKind::info_ref ? TraceKind::information : TraceKind::agent;
      r.name = t.text;
    } else if (t.kind == TokenKind::word && t.text == "responsibility") {
      advance();
      r.kind = TraceKind::responsibility;
      r.name = expect_string("responsibility name");
    } else if (t.kind == TokenKind::word && t.text == "hazard") {
      advance();
      r.kind = TraceKind::hazard;
      r.name = expect_ref(TokenKind::info_ref, "information item in '|...|'").name;
      r.guide_word = guide_word();
    } else {
      fail(t, "trace reference ('|...|', '<...>', 'responsibility \"...\"' or 'hazard |...| WORD')");
    }
    return r;
  }

  std::vector<NameRef> string_list(const char* what) {
    std::vector<NameRef> out{string_ref(what)};
    while (accept(TokenKind::comma)) out.push_back(string_ref(what));
    return out;
  }

  GuideWord guide_word() {
    const Token& t = peek();
    if (t.kind == TokenKind::word) {
      if (auto g = parse_guide_word(t.text)) {
        advance();
        return *g;
      }
    }
    fail(t, "guide word (" + guide_word_list() + ")");
  }

  Severity severity() {
    const Token& t = peek();
    if (t.kind == TokenKind::word) {
      if (auto s = parse_severity(t.text)) {
        advance();
        return *s;
      }
    }
    fail(t, "severity (none, low, medium, high, critical)");
  }

  AgentKind agent_kind() {
    const Token& t = peek();
    if (t.kind == TokenKind::word) {
      if (auto k = parse_agent_kind(t.text)) {
        advance();
        return *k;
      }
    }
    fail(t, "agent kind (organization, role, person, system, group)");
  }

  NameRef string_ref(const char* what) {
    const Token& t = peek();
    auto value = expect_string(what);
    auto name = std::string(trim(value));
    if (name.empty()) fail(t, what, "empty string");
    return NameRef{std::move(name), Where{t.span}};
  }

  NameRef expect_ref(TokenKind kind, const std::string& what) {
    const Token& t = peek();
    if (t.kind != kind) fail(t, what);
    advance();
    return NameRef{t.text, Where{t.span}};
  }

  std::string expect_string(const std::string& what) {
    const Token& t = peek();
    if (t.kind != TokenKind::string) fail(t, what);
    advance();
    return t.text;
  }

  std::string expect_word(const std::string& what) {
    const Token& t = peek();
    if (t.kind != TokenKind::word) fail(t, what);
    advance();
    return t.text;
  }

  void expect_keyword(std::string_view word) {
    if (!accept_word(word)) fail(peek(), "'" + std::string(word) + "'");
  }

  void expect(TokenKind kind, const std::string& what) {
    if (!accept(kind)) fail(peek(), what);
  }

  bool accept_word(std::string_view word) {
    if (peek().kind == TokenKind::word && peek().text == word) {
      advance();
      return true;
    }
    return false;
  }

  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    advance();
    return true;
  }

  bool check(TokenKind kind) const { return peek().kind == kind; }

  const Token& peek() const { return tokens_[pos_]; }

  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& at, std::string expected, std::string found = {}) {
    errors_.push_back({at.span, std::move(expected), found.empty() ? at.describe() : std::move(found)});
    throw Stop{};
  }

  void finish() {
    if (errors_.empty()) return;
    std::stable_sort(errors_.begin(), errors_.end(), [](const ParseError& a, const ParseError& b) {
      return std::pair(a.span.line, a.span.column) < std::pair(b.span.line, b.span.column);
    });
    throw ParseFailure(std::move(errors_));
  }

  std::vector<Token> tokens_;
  std::vector<ParseError> errors_;
  std::size_t pos_ = 0;
};

}  // namespace dsl

/// Parses a `.resp` document into unresolved declarations.
inline std::vector<Declaration> parse_model(std::string_view text, const std::string& file = {}) {
  return dsl::Parser(text, file).model_file();
}

/// Parses an `.answers` document; one record per `elicitation` session.
inline std::vector<ElicitationRecord> parse_answers(std::string_view text, const std::string& file = {}) {
  return dsl::Parser(text, file).answers_file();
}

/// Parses a `.reqs` document, keeping authored order.
inline std::vector<RequirementRecord> parse_requirements(std::string_view text, const std::string& file = {}) {
  return dsl::Parser(text, file).requirements_file();
}

}  // namespace respmod
