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
#include <vector>

#include "respmod/error.hpp"
#include "respmod/slug.hpp"

namespace respmod::dsl {

enum class TokenKind {
  word,       // keywords, tokens and identifiers: [A-Za-z0-9_.-]+
  string,     // "..." with \" and \\ escapes
  agent_ref,  // <name>
  phys_ref,   // [name]
  info_ref,   // |name|
  lbrace,
  rbrace,
  comma,
  end,
};

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;  // decoded string / trimmed name / word
  SourceSpan span;

  /// How the token is shown in "found ..." parts of error messages.
  std::string describe() const {
    switch (kind) {
      case TokenKind::word: return "'" + text + "'";
      case TokenKind::string: return "string \"" + text + "\"";
      case TokenKind::agent_ref: return "'<" + text + ">'";
      case TokenKind::phys_ref: return "'[" + text + "]'";
      case TokenKind::info_ref: return "'|" + text + "|'";
      case TokenKind::lbrace: return "'{'";
      case TokenKind::rbrace: return "'}'";
      case TokenKind::comma: return "','";
      case TokenKind::end: return "end of input";
    }
    return "token";
  }
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by an `end` token
  std::vector<ParseError> errors;
};

inline bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '-' || c == '.';
}

/// Splits a document into tokens. Lexical errors are collected and the
/// offending characters skipped, so the parser still sees the rest.
inline LexResult tokenize(std::string_view text, const std::string& file) {
  LexResult out;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t line_start = 0;

  auto span_at = [&](std::size_t p) { return SourceSpan{file, line, p - line_start + 1}; };
  auto error = [&](std::size_t p, std::string expected, std::string found) {
    out.errors.push_back({span_at(p), std::move(expected), std::move(found)});
  };

  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '\n') {
      ++pos;
      ++line;
      line_start = pos;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++pos;
      continue;
    }
    if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
      continue;
    }

    const std::size_t start = pos;
    if (c == '{' || c == '}' || c == ',') {
      out.tokens.push_back({c == '{' ? TokenKind::lbrace : c == '}' ? TokenKind::rbrace : TokenKind::comma,
                            std::string(1, c), span_at(start)});
      ++pos;
      continue;
    }

    if (c == '<' || c == '[' || c == '|') {
      const char close = c == '<' ? '>' : c == '[' ? ']' : '|';
      const TokenKind kind = c == '<' ? TokenKind::agent_ref : c == '[' ? TokenKind::phys_ref : TokenKind::info_ref;
      std::size_t end = pos + 1;
      while (end < text.size() && text[end] != close && text[end] != '\n') ++end;
      if (end >= text.size() || text[end] != close) {
        error(start, std::string("'") + close + "' to close bracket",
              end >= text.size() ? "end of input" : "end of line");
        pos = end;
        continue;
      }
      const auto name = trim(text.substr(pos + 1, end - pos - 1));
      if (name.empty()) error(start, "a name inside brackets", "empty brackets");
      out.tokens.push_back({kind, std::string(name), span_at(start)});
      pos = end + 1;
      continue;
    }

    if (c == '"') {
      std::string value;
      std::size_t p = pos + 1;
      bool closed = false;
      while (p < text.size() && text[p] != '\n') {
        if (text[p] == '"') {
          closed = true;
          ++p;
          break;
        }
        if (text[p] == '\\') {
          if (p + 1 < text.size() && (text[p + 1] == '"' || text[p + 1] == '\\')) {
            value += text[p + 1];
            p += 2;
            continue;
          }
          error(p, "escape \\\" or \\\\",
                p + 1 < text.size() ? std::string("'\\") + text[p + 1] + "'" : "end of input");
          ++p;
          continue;
        }
        value += text[p++];
      }
      if (!closed) {
        error(start, "'\"' to close string", p >= text.size() ? "end of input" : "end of line");
      } else {
        out.tokens.push_back({TokenKind::string, std::move(value), span_at(start)});
      }
      pos = p;
      continue;
    }

    if (is_word_char(c)) {
      std::size_t end = pos;
      while (end < text.size() && is_word_char(text[end])) ++end;
      out.tokens.push_back({TokenKind::word, std::string(text.substr(pos, end - pos)), span_at(start)});
      pos = end;
      continue;
    }

    error(start, "a keyword, name or string", std::string("character '") + c + "'");
    ++pos;
  }
  out.tokens.push_back({TokenKind::end, {}, span_at(pos)});
  return out;
}

}  // namespace respmod::dsl
