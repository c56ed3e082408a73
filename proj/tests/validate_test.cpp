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

#include <gtest/gtest.h>

#include <regex>
#include <set>

#include "respmod/printer.hpp"
#include "respmod/validate.hpp"
#include "test_support.hpp"

namespace respmod {
namespace {

using testing::corpus;
using testing::load;
using testing::load_text;
using testing::slurp;

std::size_t count_code(const std::vector<Diagnostic>& diags, const std::string& code) {
  return static_cast<std::size_t>(
      std::count_if(diags.begin(), diags.end(), [&](const Diagnostic& d) { return d.code == code; }));
}

// Counts names mentioned in the file that have no declaration line of their own.
std::size_t undeclared_mentions(const std::string& text) {
  std::set<std::string> declared, mentioned;
  const std::regex decl(R"re(^\s*(agent\s*<([^>]*)>|resource\s*\|([^|]*)\||resource\s*\[([^\]]*)\]|channel\s*"([^"]*)"))re");
  const std::regex ref(R"re(<([^>\n]*)>|\|([^|\n]*)\||\[([^\]\n]*)\]|(via|,)\s*"([^"]*)")re");
  auto strip = [](std::string s) {
    const auto a = s.find_first_not_of(' ');
    const auto b = s.find_last_not_of(' ');
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    line = line.substr(0, line.find('#'));
    std::smatch m;
    if (std::regex_search(line, m, decl)) {
      for (int g : {2, 3, 4, 5})
        if (m[g].matched) declared.insert(strip(m[g]));
      continue;
    }
    for (auto it = std::sregex_iterator(line.begin(), line.end(), ref); it != std::sregex_iterator(); ++it) {
      for (int g : {1, 2, 3, 5})
        if ((*it)[g].matched) mentioned.insert(strip((*it)[g]));
    }
  }
  std::size_t n = 0;
  for (const auto& name : mentioned) n += declared.count(name) ? 0 : 1;
  return n;
}

TEST(Validate, FullyExplicitAssignedModelIsClean) {
  const Model m = load_text(R"(agent <A>
resource |I|
channel "C"
responsibility "R" { assigned to <A> requires |I| from <A> via "C" }
)");
  EXPECT_TRUE(validate(m, ValidationMode::lenient).empty());
  EXPECT_TRUE(validate(m, ValidationMode::strict).empty());
}

TEST(Validate, LenientFindsTheUnassignedResponsibility) {
  const auto diags = validate(load(corpus("evacuation.resp")), ValidationMode::lenient);
  ASSERT_EQ(count_code(diags, "UNASSIGNED_RESP"), 1u);
  const auto it = std::find_if(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.code == "UNASSIGNED_RESP"; });
  EXPECT_EQ(it->subject.id, "collect-evacuee-information");
  EXPECT_EQ(it->severity, Severity::high);
  EXPECT_EQ(count_code(diags, "IMPLICIT_DECL"), 0u);
}

TEST(Validate, StrictAddsOneDiagnosticPerUndeclaredMention) {
  const auto text = slurp(corpus("evacuation.resp"));
  const std::size_t expected = undeclared_mentions(text);
  EXPECT_EQ(expected, 2u);  // sanity check of the scanner on this corpus
  const auto diags = validate(load(corpus("evacuation.resp")), ValidationMode::strict);
  EXPECT_EQ(count_code(diags, "IMPLICIT_DECL"), expected);
  EXPECT_EQ(count_code(diags, "UNASSIGNED_RESP"), 1u);
}

TEST(Validate, StrictReportsMissingChannels) {
  const Model m = load_text("agent <A>\nresource |I|\nresponsibility \"R\" { assigned to <A> requires |I| from <A> }\n");
  EXPECT_TRUE(validate(m, ValidationMode::lenient).empty());
  const auto diags = validate(m, ValidationMode::strict);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].code, "NO_CHANNEL");
  EXPECT_EQ(diags[0].subject.id, "r/i");
}

TEST(Validate, UnsourcedInformation) {
  const Model m = load_text(R"(responsibility "R" { assigned to <A> requires |I| }
responsibility "S" { assigned to <A> requires |J| }
responsibility "T" { assigned to <A> produces |J| }
)");
  const auto diags = validate(m);
  ASSERT_EQ(count_code(diags, "UNSOURCED_INFO"), 1u);
  EXPECT_EQ(diags[0].subject.id, "r/i");
}

TEST(Validate, SequenceCycleIsCritical) {
  const Model m = load_text(R"(responsibility "A" { assigned to <X> precedes "B" }
responsibility "B" { assigned to <X> precedes "A" }
)");
  const auto diags = validate(m);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].code, "SEQUENCE_CYCLE");
  EXPECT_EQ(diags[0].severity, Severity::critical);
}

TEST(Validate, OrderedByCodeThenSubject) {
  const Model m = load_text(R"(responsibility "b" {}
responsibility "a" { requires |I| }
)");
  const auto diags = validate(m, ValidationMode::strict);
  std::vector<std::pair<std::string, std::string>> keys;
  for (const auto& d : diags) keys.emplace_back(d.code, d.subject.id);
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_EQ(count_code(diags, "UNASSIGNED_RESP"), 2u);
}

TEST(Validate, PureAndByteIdenticalWhenRendered) {
  const Model m = load(corpus("evacuation.resp"));
  const auto before = print_model(m);
  auto render = [&] {
    std::string s;
    for (const auto& d : validate(m, ValidationMode::strict)) s += d.render() + "\n";
    return s;
  };
  EXPECT_EQ(render(), render());
  EXPECT_EQ(print_model(m), before);
}

TEST(Validate, RenderIncludesLocation) {
  const auto diags = validate(load(corpus("evacuation.resp")));
  ASSERT_FALSE(diags.empty());
  EXPECT_NE(diags[0].render().find("evacuation.resp:"), std::string::npos);
  EXPECT_NE(diags[0].render().find("UNASSIGNED_RESP high collect-evacuee-information: "), std::string::npos);
}

}  // namespace
}  // namespace respmod
