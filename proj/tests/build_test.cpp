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

#include "respmod/build.hpp"
#include "respmod/printer.hpp"
#include "test_support.hpp"

namespace respmod {
namespace {

using testing::corpus;
using testing::load;
using testing::load_text;

std::vector<std::string> build_errors(const std::string& text) {
  try {
    load_text(text);
  } catch (const BuildFailure& f) {
    std::vector<std::string> out;
    for (const auto& e : f.errors()) out.push_back(e.message);
    return out;
  }
  return {};
}

bool any_contains(const std::vector<std::string>& messages, const std::string& needle) {
  for (const auto& m : messages)
    if (m.find(needle) != std::string::npos) return true;
  return false;
}

TEST(BuildModel, EmptyDeclarationList) {
  const Model m = build_model({});
  EXPECT_EQ(m.name, "");
  EXPECT_TRUE(m.agents.empty());
  EXPECT_TRUE(m.resources.empty());
  EXPECT_TRUE(m.channels.empty());
  EXPECT_TRUE(m.responsibilities.empty());
  EXPECT_TRUE(m.sequence_links.empty());
}

TEST(BuildModel, EvacuationModelHasSixResponsibilitiesOneUnassigned) {
  for (const auto* file : {"evacuation.resp", "evacuation-outline.resp"}) {
    const Model m = load(corpus(file));
    ASSERT_EQ(m.responsibilities.size(), 6u) << file;
    int unassigned = 0;
    for (const auto& r : m.responsibilities) unassigned += r.assigned_to.empty() ? 1 : 0;
    EXPECT_EQ(unassigned, 1) << file;
    const auto* r = m.find_responsibility("collect-evacuee-information");
    ASSERT_NE(r, nullptr) << file;
    EXPECT_TRUE(r->assigned_to.empty());
  }
}

TEST(BuildModel, ConflictingResourceKind) {
  const auto errors = build_errors("resource [Area map]\nresource |Area map|\n");
  ASSERT_EQ(errors.size(), 1u);
  EXPECT_NE(errors[0].find("conflicting resource kind"), std::string::npos) << errors[0];
}

TEST(BuildModel, ConflictingResourceKindFromUse) {
  EXPECT_TRUE(any_contains(build_errors("resource [Map]\nresponsibility \"R\" { requires |Map| }\n"),
                           "conflicting resource kind"));
}

TEST(BuildModel, ConflictingAgentKind) {
  EXPECT_TRUE(any_contains(build_errors("agent <A> kind role\nagent <A> kind person\n"), "conflicting agent kind"));
}

TEST(BuildModel, DuplicateResponsibility) {
  EXPECT_TRUE(any_contains(build_errors("responsibility \"R\" {}\nresponsibility \"R\" {}\n"),
                           "duplicate responsibility"));
}

TEST(BuildModel, UnresolvedPrecedes) {
  EXPECT_TRUE(any_contains(build_errors("responsibility \"R\" { precedes \"Nowhere\" }\n"),
                           "precedes unknown responsibility \"Nowhere\""));
}

TEST(BuildModel, SlugCollisionIsDuplicateId) {
  EXPECT_TRUE(any_contains(build_errors("agent <Fire Service>\nagent <Fire-service>\n"), "duplicate agent id"));
}

TEST(BuildModel, BackupChannelErrors) {
  EXPECT_FALSE(build_errors("channel \"A\" backup_of \"B\"\n").empty());
  EXPECT_FALSE(build_errors("channel \"A\" backup_of \"A\"\n").empty());
  EXPECT_FALSE(build_errors("channel \"A\" backup_of \"B\"\nchannel \"B\" backup_of \"A\"\n").empty());
  EXPECT_TRUE(build_errors("channel \"A\"\nchannel \"B\" backup_of \"A\"\n").empty());
}

TEST(BuildModel, HazardForUnrelatedItemIsAnError) {
  EXPECT_FALSE(build_errors("responsibility \"R\" { hazard |X| late \"Delay.\" }\n").empty());
}

TEST(BuildModel, ImplicitDeclarationsUseDefaults) {
  const Model m = load_text("responsibility \"R\" { assigned to <A> requires |I| via \"C\" uses [P] }\n");
  ASSERT_EQ(m.agents.size(), 1u);
  EXPECT_EQ(m.agents[0].kind, AgentKind::organization);
  EXPECT_TRUE(m.agents[0].origin.implicit);
  ASSERT_EQ(m.channels.size(), 1u);
  EXPECT_FALSE(m.channels[0].medium.has_value());
  ASSERT_EQ(m.resources.size(), 2u);
  EXPECT_EQ(m.find_resource("i")->kind, ResourceKind::information);
  EXPECT_EQ(m.find_resource("p")->kind, ResourceKind::physical);
}

TEST(BuildModel, CanonicalOrderByDisplayName) {
  const Model m = load_text("agent <b>\nagent <C>\nagent <A>\nresponsibility \"z\" {}\nresponsibility \"Y\" {}\n");
  ASSERT_EQ(m.agents.size(), 3u);
  EXPECT_EQ(m.agents[0].name, "A");
  EXPECT_EQ(m.agents[1].name, "C");
  EXPECT_EQ(m.agents[2].name, "b");
  EXPECT_EQ(m.responsibilities[0].name, "Y");
}

TEST(BuildModel, SourcesKeepFirstMentionOrder) {
  const Model m = load(corpus("evacuation.resp"));
  const auto* need = m.find_responsibility("evacuate-area")->find_need("evacuated-premises");
  ASSERT_NE(need, nullptr);
  EXPECT_EQ(need->sources, (std::vector<std::string>{"police", "fire-service"}));
}

TEST(BuildModel, DuplicateNeedsMergeAsUnion) {
  const Model once = load_text(R"(responsibility "R" {
  requires |I| from <A> via "C" criticality low
  requires |I| from <B>, <A> via "D" criticality high
}
)");
  const auto& n = once.responsibilities[0].needs;
  ASSERT_EQ(n.size(), 1u);
  EXPECT_EQ(n[0].sources, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(n[0].channels, (std::vector<std::string>{"c", "d"}));
  EXPECT_EQ(n[0].criticality, Severity::high);
}

TEST(BuildModel, LoadingTheSameNeedTwiceEqualsOnce) {
  const std::string line = "  requires |I| from <A> via \"C\"\n";
  const Model once = load_text("responsibility \"R\" {\n" + line + "}\n");
  const Model twice = load_text("responsibility \"R\" {\n" + line + line + "}\n");
  EXPECT_EQ(once, twice);
}

TEST(BuildModel, CanonicalPrintStableAcrossRebuilds) {
  const Model m = load(corpus("evacuation.resp"));
  EXPECT_EQ(print_model(build_model(to_declarations(m))), print_model(m));
}

TEST(BuildModel, ErrorsCarrySourceLocations) {
  try {
    build_model(parse_model("resource [A]\nresource |A|\n", "k.resp"));
    FAIL();
  } catch (const BuildFailure& f) {
    ASSERT_FALSE(f.errors().empty());
    EXPECT_EQ(f.errors()[0].render().rfind("k.resp:2:", 0), 0u) << f.errors()[0].render();
  }
}

}  // namespace
}  // namespace respmod
