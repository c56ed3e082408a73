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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace respmod {

/// Position of a parsed element. Lines and columns are 1-based.
struct SourceSpan {
  std::string file;
  std::size_t line = 1;
  std::size_t column = 1;

  bool operator==(const SourceSpan&) const = default;

  std::string render() const {
    return (file.empty() ? std::string("<input>") : file) + ":" + std::to_string(line) + ":" +
           std::to_string(column);
  }
};

/// Base of every error the library throws. `what()` holds all messages joined
/// by newlines, each already rendered in `file:line:col: error: ...` form when
/// a location is known.
class Error : public std::runtime_error {
 public:
  explicit Error(std::vector<std::string> messages)
      : std::runtime_error(join(messages)), messages_(std::move(messages)) {}
  explicit Error(const std::string& message) : Error(std::vector<std::string>{message}) {}

  const std::vector<std::string>& messages() const noexcept { return messages_; }

 private:
  static std::string join(const std::vector<std::string>& messages) {
    std::string out;
    for (const auto& m : messages) {
      if (!out.empty()) out += '\n';
      out += m;
    }
    return out;
  }

  std::vector<std::string> messages_;
};

struct ParseError {
  SourceSpan span;
  std::string expected;
  std::string found;

  std::string render() const {
    return span.render() + ": error: expected " + expected + ", found " + found;
  }
};

class ParseFailure : public Error {
 public:
  explicit ParseFailure(std::vector<ParseError> errors)
      : Error(render_all(errors)), errors_(std::move(errors)) {}

  const std::vector<ParseError>& errors() const noexcept { return errors_; }

 private:
  static std::vector<std::string> render_all(const std::vector<ParseError>& errors) {
    std::vector<std::string> out;
    out.reserve(errors.size());
    for (const auto& e : errors) out.push_back(e.render());
    return out;
  }

  std::vector<ParseError> errors_;
};

/// A semantic problem found while resolving declarations into a model.
struct BuildError {
  std::optional<SourceSpan> span;
  std::string message;

  std::string render() const {
    return (span ? span->render() + ": " : std::string()) + "error: " + message;
  }
};

class BuildFailure : public Error {
 public:
  explicit BuildFailure(std::vector<BuildError> errors)
      : Error(render_all(errors)), errors_(std::move(errors)) {}

  const std::vector<BuildError>& errors() const noexcept { return errors_; }

 private:
  static std::vector<std::string> render_all(const std::vector<BuildError>& errors) {
    std::vector<std::string> out;
    out.reserve(errors.size());
    for (const auto& e : errors) out.push_back(e.render());
    return out;
  }

  std::vector<BuildError> errors_;
};

}  // namespace respmod
