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

#include "respmod/analysis.hpp"
#include "respmod/printer.hpp"
#include "test_support.hpp"

namespace respmod {
namespace {

using testing::corpus;
using testing::load;
using testing::load_text;

std::vector<std::string> subjects(const std::vector<Finding>& findings) {
  std::vector<std::string> out;
  for (const auto& f : findings) out.push_back(f.subject());
  return out;
}

TEST(Unassigned, CorpusHasExactlyTheCollectionResponsibility) {
  const Model m = load(corpus("evacuation.resp"));
  const auto f = find_unassigned(m);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].code, "UNASSIGNED_RESP");
  EXPECT_EQ(f[0].severity, Severity::high);
  EXPECT_EQ(f[0].subjects, std::vector<std::string>{"collect-evacuee-information"});
  EXPECT_EQ(m.responsibility_name(f[0].subjects[0]), "Collect evacuee information");
}

TEST(Unassigned, AllAssignedGivesNothing) {
  EXPECT_TRUE(find_unassigned(load_text("responsibility \"A\" { assigned to <X> }\n")).empty());
}

TEST(Unassigned, TwoOfThreeInNameOrder) {
  const Model m = load_text(R"(responsibility "Zeta" {}
responsibility "Mid" { assigned to <X> }
responsibility "Alpha" {}
)");
  EXPECT_EQ(subjects(find_unassigned(m)), (std::vector<std::string>{"alpha", "zeta"}));
}

TEST(Unassigned, EmptyIffEveryResponsibilityAssigned) {
  testing::ModelGenerator gen(7);
  for (int i = 0; i < 100; ++i) {
    const Model m = gen.model();
    std::size_t brute = 0;
    for (const auto& r : m.responsibilities) brute += r.assigned_to.empty() ? 1 : 0;
    ASSERT_EQ(find_unassigned(m).size(), brute);
  }
}

TEST(Unsourced, SourcedNeedIsNotFlagged) {
  const Model m = load(corpus("evacuation.resp"));
  EXPECT_TRUE(find_unsourced_info(m).empty());
}

TEST(Unsourced, NoSourceNoProducerIsFlagged) {
  const auto f = find_unsourced_info(load_text("responsibility \"R\" { requires |I| }\n"));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].subject(), "r/i");
  EXPECT_EQ(f[0].severity, Severity::medium);
}

TEST(Unsourced, ProducedElsewhereIsNotFlagged) {
  const Model m = load_text(R"(responsibility "R" { requires |I| }
responsibility "S" { produces |I| }
)");
  EXPECT_TRUE(find_unsourced_info(m).empty());
}

TEST(SingleChannel, TwoChannelProductNotFlagged) {
  const Model m = load(corpus("evacuation.resp"));
  for (const auto& f : find_single_channel(m)) {
    EXPECT_NE(f.subject(),
              "evacuate-area/information-about-evacuated-premises-evacuation-time-and-units-responsible-for-evacuation");
  }
}

TEST(SingleChannel, AreaMapFlagged) {
  const auto s = subjects(find_single_channel(load(corpus("evacuation.resp"))));
  EXPECT_NE(std::find(s.begin(), s.end(), "evacuate-area/area-map"), s.end());
  EXPECT_EQ(s.size(), 8u);  // every required item has one channel; recorded items have two
}

TEST(SingleChannel, BackupPairCountsAsTwo) {
  const Model forward = load_text(R"(channel "Radio"
channel "Phone" backup_of "Radio"
responsibility "R" { requires |I| via "Radio" requires |J| via "Phone" }
)");
  EXPECT_TRUE(find_single_channel(forward).empty());
  EXPECT_EQ(effective_channel_count(forward, {"radio"}), 2u);
  EXPECT_EQ(effective_channel_count(forward, {"phone"}), 2u);
  EXPECT_EQ(effective_channel_count(forward, {}), 0u);
}

TEST(SingleChannel, ZeroChannelsIsNotThisCheck) {
  EXPECT_TRUE(find_single_channel(load_text("responsibility \"R\" { requires |I| }\n")).empty());
}

TEST(DuplicateSources, IdenticalSourcesNotFlagged) {
  const Model m = load_text(R"(responsibility "A" { requires |Area map| from <County council> }
responsibility "B" { requires |Area map| from <County council> }
)");
  EXPECT_TRUE(find_duplicate_sources(m).empty());
}

TEST(DuplicateSources, DifferingSourcesFlagged) {
  const Model m = load_text(R"(responsibility "A" { requires |Area map| from <County council> }
responsibility "B" { requires |Area map| from <District Council> }
)");
  const auto f = find_duplicate_sources(m);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].subject(), "area-map");
  EXPECT_EQ(f[0].severity, Severity::low);
}

TEST(DuplicateSources, TwoProducersFlagged) {
  const Model m = load_text(R"(responsibility "A" { produces |Log| }
responsibility "B" { produces |Log| }
)");
  ASSERT_EQ(find_duplicate_sources(m).size(), 1u);
}

TEST(AgentLoad, EmptyModel) {
  for (std::size_t t : {1u, 3u, 100u}) EXPECT_TRUE(agent_load(Model{}, t).empty());
}

TEST(AgentLoad, CorpusUnderThreshold) {
  // Hand count from the corpus file: no agent is assigned more than one responsibility.
  EXPECT_TRUE(agent_load(load(corpus("evacuation.resp")), 3).empty());
  EXPECT_TRUE(agent_load(load(corpus("evacuation.resp")), 1).empty());
}

TEST(AgentLoad, OverThreshold) {
  const Model m = load_text(R"(responsibility "A" { assigned to <X> }
responsibility "B" { assigned to <X> }
responsibility "C" { assigned to <X> }
responsibility "D" { assigned to <X>, <Y> }
)");
  const auto f = agent_load(m, 3);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].subject(), "x");
  EXPECT_NE(f[0].explanation.find("4"), std::string::npos);
  EXPECT_TRUE(agent_load(m, 4).empty());
  EXPECT_THROW(agent_load(m, 0), Error);
}

TEST(SequenceCycles, CorpusLinkIsAcyclic) {
  const Model m = load(corpus("evacuation-outline.resp"));
  EXPECT_EQ(m.sequence_links.size(), 1u);
  EXPECT_TRUE(detect_sequence_cycles(m).empty());
}

TEST(SequenceCycles, TwoCycle) {
  const auto f = detect_sequence_cycles(load_text(R"(responsibility "B" { precedes "A" }
responsibility "A" { precedes "B" }
)"));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].subjects, (std::vector<std::string>{"a", "b"}));
}

TEST(SequenceCycles, SelfLoop) {
  const auto f = detect_sequence_cycles(load_text("responsibility \"A\" { precedes \"A\" }\n"));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].subjects, std::vector<std::string>{"a"});
}

TEST(SequenceCycles, ChainOfFive) {
  EXPECT_TRUE(detect_sequence_cycles(load_text(R"(responsibility "A" { precedes "B" }
responsibility "B" { precedes "C" }
responsibility "C" { precedes "D" }
responsibility "D" { precedes "E" }
responsibility "E" {}
)"))
                  .empty());
}

TEST(Analyze, CorpusFindings) {
  const auto f = analyze(load(corpus("evacuation.resp")));
  const auto n = std::count_if(f.begin(), f.end(), [](const Finding& x) { return x.code == "UNASSIGNED_RESP"; });
  EXPECT_EQ(n, 1);
  std::vector<std::pair<std::string, std::string>> keys;
  for (const auto& x : f) keys.emplace_back(x.code, x.subject());
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
}

TEST(Analyze, NeverMutatesTheModel) {
  testing::ModelGenerator gen(11);
  for (int i = 0; i < 50; ++i) {
    const Model m = gen.model();
    const Model copy = m;
    const auto before = print_model(m);
    const auto a = analyze(m, AnalysisOptions{1});
    EXPECT_EQ(analyze(m, AnalysisOptions{1}), a);
    ASSERT_EQ(print_model(m), before);
    ASSERT_EQ(m, copy);
  }
}

}  // namespace
}  // namespace respmod
