// Copyright 2026 The Lexiq Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <utility>

#include "lexiq/graph.hpp"
#include "lexiq/oracle.hpp"
#include "lexiq/snlp.hpp"
#include "test_util.hpp"

using namespace lexiq;

namespace {

constexpr const char* kBankQuestion =
    "How can student deposit money into the bank?";

std::vector<Chunk> chunks_of(const std::string& text) {
  const KnowledgeBase& kb = test::fixture_kb();
  return chunk(tag(tokenize(text), kb.tagger, kb.lexicon));
}

// The fixture's description of bank senses 2, 3, 4, 6 as mapping candidates.
std::vector<SenseCandidate> bank_money_candidates() {
  return {{2, "Bank"}, {3, "MoneyBox"}, {4, "GamblingFund"}, {6, "Reserve"}};
}

}  // namespace

TEST_CASE("extract_headwords sorts heads into nodes and relations") {
  const KnowledgeBase& kb = test::fixture_kb();

  SUBCASE("bracket example") {
    Headwords hw = extract_headwords(chunks_of(kBankQuestion), kb.lexicon);
    REQUIRE(hw.nodes.size() == 3);
    CHECK(hw.nodes[0] == Headword{"student", 0});
    CHECK(hw.nodes[1] == Headword{"money", 2});
    CHECK(hw.nodes[2] == Headword{"bank", 3});
    REQUIRE(hw.relations.size() == 1);
    CHECK(hw.relations[0] == Headword{"deposit", 1});
  }
  SUBCASE("headwords are lemmatized") {
    Headwords hw = extract_headwords(
        chunks_of("How many courses does the university offer?"), kb.lexicon);
    REQUIRE_FALSE(hw.nodes.empty());
    CHECK(hw.nodes[0].lemma == "course");
    REQUIRE(hw.relations.size() == 1);
    CHECK(hw.relations[0].lemma == "offer");
  }
  SUBCASE("irregular verb heads lemmatize through inflections") {
    Headwords hw = extract_headwords(chunks_of("Who taught the course?"),
                                     kb.lexicon);
    REQUIRE(hw.relations.size() == 1);
    CHECK(hw.relations[0].lemma == "teach");
  }
  SUBCASE("empty input") {
    CHECK(extract_headwords({}, kb.lexicon) == Headwords{});
  }
  SUBCASE("hand-built chunk list") {
    std::vector<Chunk> chunks = {
        {ChunkKind::NP, 0, 1, 0, "advisor"},
        {ChunkKind::VP, 1, 2, 1, "contact"},
        {ChunkKind::NP, 2, 3, 2, "student"},
    };
    Headwords hw = extract_headwords(chunks, kb.lexicon);
    REQUIRE(hw.nodes.size() == 2);
    CHECK(hw.nodes[0].lemma == "advisor");
    CHECK(hw.nodes[1].lemma == "student");
    REQUIRE(hw.relations.size() == 1);
    CHECK(hw.relations[0].lemma == "contact");
  }
}

TEST_CASE("build_question_graph pairs each relation with its neighbors") {
  SUBCASE("bracket example yields two triples") {
    Headwords hw;
    hw.nodes = {{"student", 0}, {"money", 2}, {"bank", 3}};
    hw.relations = {{"deposit", 1}};
    QuestionGraph graph = build_question_graph(hw);
    REQUIRE(graph.triples.size() == 2);
    CHECK(graph.triples[0] == Triple{"student", "deposit", "money"});
    CHECK(graph.triples[1] == Triple{"student", "deposit", "bank"});
  }
  SUBCASE("no relations, no triples") {
    Headwords hw;
    hw.nodes = {{"chair", 0}, {"department", 1}};
    CHECK(build_question_graph(hw).triples.empty());
  }
  SUBCASE("a relation with no preceding node yields nothing") {
    Headwords hw;
    hw.nodes = {{"bank", 1}, {"river", 2}};
    hw.relations = {{"seat", 0}};
    CHECK(build_question_graph(hw).triples.empty());
  }
  SUBCASE("the nearest preceding node is the subject") {
    Headwords hw;
    hw.nodes = {{"advisor", 0}, {"student", 1}, {"course", 3}};
    hw.relations = {{"enroll", 2}};
    QuestionGraph graph = build_question_graph(hw);
    REQUIRE(graph.triples.size() == 1);
    CHECK(graph.triples[0] == Triple{"student", "enroll", "course"});
  }
  SUBCASE("two relations expand independently") {
    Headwords hw;
    hw.nodes = {{"student", 0}, {"course", 2}, {"meal", 4}};
    hw.relations = {{"enroll", 1}, {"eat", 3}};
    QuestionGraph graph = build_question_graph(hw);
    REQUIRE(graph.triples.size() == 3);
    CHECK(graph.triples[0] == Triple{"student", "enroll", "course"});
    CHECK(graph.triples[1] == Triple{"student", "enroll", "meal"});
    CHECK(graph.triples[2] == Triple{"course", "eat", "meal"});
  }
}

TEST_CASE("map_sense confirms the deposit sense through the ontology") {
  const KnowledgeBase& kb = test::fixture_kb();
  QuestionGraph graph;
  graph.triples = {{"student", "deposit", "money"},
                   {"student", "deposit", "bank"}};

  MappingResult result = map_sense(kb.ontology, kb.lexicon, kb.context, graph,
                                   "bank", bank_money_candidates());
  CHECK(result.chosen == 2);
  CHECK(result.per_sense_support ==
        std::map<int, int>{{2, 1}, {3, 0}, {4, 0}, {6, 0}});
  REQUIRE(result.matched_triples.size() == 1);
  CHECK(result.matched_triples[0].edge ==
        OntologyEdge{"Student", "deposit", "Bank"});
  CHECK(result.matched_triples[0].triple ==
        Triple{"student", "deposit", "bank"});
  CHECK(result.matched_triples[0].sense_id == 2);
}

TEST_CASE("map_sense edge cases") {
  const KnowledgeBase& kb = test::fixture_kb();
  QuestionGraph graph;
  graph.triples = {{"student", "deposit", "bank"}};

  SUBCASE("an empty ontology supports nothing") {
    Ontology empty;
    MappingResult result = map_sense(empty, kb.lexicon, kb.context, graph,
                                     "bank", bank_money_candidates());
    CHECK_FALSE(result.chosen);
    for (const auto& [id, support] : result.per_sense_support) {
      CHECK(support == 0);
    }
  }
  SUBCASE("a word outside every triple yields an empty result") {
    MappingResult result = map_sense(kb.ontology, kb.lexicon, kb.context,
                                     graph, "course", {{1, "Course"}});
    CHECK_FALSE(result.chosen);
    CHECK(result.per_sense_support.empty());
    CHECK(result.matched_triples.empty());
  }
  SUBCASE("an empty graph yields an empty result") {
    MappingResult result = map_sense(kb.ontology, kb.lexicon, kb.context, {},
                                     "bank", bank_money_candidates());
    CHECK_FALSE(result.chosen);
    CHECK(result.per_sense_support.empty());
  }
  SUBCASE("a candidate without an anchor gets zero support by definition") {
    MappingResult result = map_sense(kb.ontology, kb.lexicon, kb.context,
                                     graph, "bank",
                                     {{2, std::nullopt}, {3, "MoneyBox"}});
    CHECK_FALSE(result.chosen);
    CHECK(result.per_sense_support == std::map<int, int>{{2, 0}, {3, 0}});
  }
  SUBCASE("relation synonyms extend the match") {
    // "put" lists "deposit" as a synonym; the edge says deposit.
    QuestionGraph put_graph;
    put_graph.triples = {{"student", "put", "bank"}};
    MappingResult result = map_sense(kb.ontology, kb.lexicon, kb.context,
                                     put_graph, "bank",
                                     bank_money_candidates());
    CHECK(result.chosen == 2);
    CHECK(result.per_sense_support.at(2) == 1);
  }
  SUBCASE("an unrelated relation does not match") {
    QuestionGraph eat_graph;
    eat_graph.triples = {{"student", "eat", "bank"}};
    MappingResult result = map_sense(kb.ontology, kb.lexicon, kb.context,
                                     eat_graph, "bank",
                                     bank_money_candidates());
    CHECK_FALSE(result.chosen);
  }
  SUBCASE("edge matching ignores direction") {
    // The stored edge is Student -deposit-> Bank; flip the triple.
    QuestionGraph flipped;
    flipped.triples = {{"bank", "deposit", "student"}};
    MappingResult result = map_sense(kb.ontology, kb.lexicon, kb.context,
                                     flipped, "bank", bank_money_candidates());
    CHECK(result.chosen == 2);
  }
  SUBCASE("ties break toward the smallest sense id") {
    Ontology onto;
    onto.nodes = {"Student", "Bank", "Reserve"};
    onto.edges = {{"Student", "deposit", "Bank"},
                  {"Student", "deposit", "Reserve"}};
    MappingResult result =
        map_sense(onto, kb.lexicon, kb.context, graph, "bank",
                  {{2, "Bank"}, {6, "Reserve"}});
    CHECK(result.per_sense_support == std::map<int, int>{{2, 1}, {6, 1}});
    CHECK(result.chosen == 2);
  }
  SUBCASE("higher support wins over a smaller id") {
    QuestionGraph both;
    both.triples = {{"student", "deposit", "bank"},
                    {"money", "hold", "bank"}};
    Ontology onto;
    onto.nodes = {"Student", "Bank", "Reserve", "Money"};
    onto.edges = {{"Student", "deposit", "Bank"},
                  {"Student", "deposit", "Reserve"},
                  {"Reserve", "hold", "Money"}};
    MappingResult result =
        map_sense(onto, kb.lexicon, kb.context, both, "bank",
                  {{2, "Bank"}, {6, "Reserve"}});
    CHECK(result.per_sense_support == std::map<int, int>{{2, 1}, {6, 2}});
    CHECK(result.chosen == 6);
  }
}

TEST_CASE("non-ambiguous slots prefer anchors over node names") {
  // The lexicon's "money" is unambiguous and anchored to Money; point the
  // anchor to Cashbox instead and keep a Money node around to show the
  // anchor wins over the case-insensitive name match.
  const KnowledgeBase& kb = test::fixture_kb();
  ContextKnowledge ctx = kb.context;
  for (auto& r : ctx.records) {
    if (r.lemma == "money") r.concept_anchor = "Cashbox";
  }
  Ontology onto;
  onto.nodes = {"Cashbox", "Money", "Bank"};
  onto.edges = {{"Cashbox", "fill", "Bank"}};

  QuestionGraph graph;
  graph.triples = {{"money", "fill", "bank"}};
  MappingResult anchored =
      map_sense(onto, kb.lexicon, ctx, graph, "bank", {{2, "Bank"}});
  CHECK(anchored.chosen == 2);

  // With the plain fixture records, "money" anchors to Money and the
  // Cashbox edge no longer applies.
  MappingResult named =
      map_sense(onto, kb.lexicon, kb.context, graph, "bank", {{2, "Bank"}});
  CHECK_FALSE(named.chosen);
}

TEST_CASE("mapping is invariant under candidate permutation and edge reversal") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    test::MappingCase mc = test::random_mapping_case(rng);
    MappingResult base = map_sense(mc.onto, mc.lexicon, mc.ctx, mc.graph,
                                   mc.amb, mc.candidates);

    auto shuffled = mc.candidates;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    MappingResult permuted =
        map_sense(mc.onto, mc.lexicon, mc.ctx, mc.graph, mc.amb, shuffled);
    CHECK(permuted.chosen == base.chosen);
    CHECK(permuted.per_sense_support == base.per_sense_support);

    Ontology reversed = mc.onto;
    for (auto& e : reversed.edges) std::swap(e.source, e.target);
    MappingResult mirrored =
        map_sense(reversed, mc.lexicon, mc.ctx, mc.graph, mc.amb,
                  mc.candidates);
    CHECK(mirrored.per_sense_support == base.per_sense_support);
  }
}

TEST_CASE("adding an edge never lowers support") {
  std::mt19937 rng(47);
  static const std::vector<std::string> kRels = {"rone", "rtwo", "rthree"};
  for (int trial = 0; trial < 200; ++trial) {
    test::MappingCase mc = test::random_mapping_case(rng);
    MappingResult before = map_sense(mc.onto, mc.lexicon, mc.ctx, mc.graph,
                                     mc.amb, mc.candidates);

    std::vector<std::string> nodes(mc.onto.nodes.begin(), mc.onto.nodes.end());
    std::uniform_int_distribution<std::size_t> node_dist(0, nodes.size() - 1);
    std::uniform_int_distribution<std::size_t> rel_dist(0, kRels.size() - 1);
    Ontology grown = mc.onto;
    grown.edges.push_back(
        {nodes[node_dist(rng)], kRels[rel_dist(rng)], nodes[node_dist(rng)]});

    MappingResult after = map_sense(grown, mc.lexicon, mc.ctx, mc.graph,
                                    mc.amb, mc.candidates);
    for (const auto& [id, support] : before.per_sense_support) {
      CHECK(after.per_sense_support.at(id) >= support);
    }
  }
}

TEST_CASE("the exhaustive oracle agrees with map_sense") {
  const KnowledgeBase& kb = test::fixture_kb();
  // The oracle enumerates exhaustively and insists on desk-scale inputs, so
  // compare on a slice of the fixture ontology rather than the whole thing.
  Ontology slice;
  slice.nodes = {"Student", "Bank",    "MoneyBox", "GamblingFund",
                 "Reserve", "Money"};
  slice.edges = {{"Student", "deposit", "Bank"}, {"Bank", "hold", "Money"}};

  SUBCASE("on the bracket example") {
    QuestionGraph graph;
    graph.triples = {{"student", "deposit", "money"},
                     {"student", "deposit", "bank"}};
    MappingResult fast = map_sense(slice, kb.lexicon, kb.context, graph,
                                   "bank", bank_money_candidates());
    MappingResult slow = enumerate_oracle(slice, kb.lexicon, kb.context,
                                          graph, "bank",
                                          bank_money_candidates());
    CHECK(fast == slow);
    CHECK(fast.chosen == 2);
    CHECK(fast.per_sense_support ==
          std::map<int, int>{{2, 1}, {3, 0}, {4, 0}, {6, 0}});
  }
  SUBCASE("on a single candidate with an empty graph") {
    MappingResult slow = enumerate_oracle(slice, kb.lexicon, kb.context, {},
                                          "bank", {{2, "Bank"}});
    CHECK_FALSE(slow.chosen);
    CHECK(slow.per_sense_support.empty());
  }
  SUBCASE("over randomized knowledge bases") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
      test::MappingCase mc = test::random_mapping_case(rng);
      MappingResult fast = map_sense(mc.onto, mc.lexicon, mc.ctx, mc.graph,
                                     mc.amb, mc.candidates);
      MappingResult slow = enumerate_oracle(mc.onto, mc.lexicon, mc.ctx,
                                            mc.graph, mc.amb, mc.candidates);
      REQUIRE(fast == slow);
    }
  }
}

TEST_CASE("the oracle refuses inputs beyond desk scale") {
  const KnowledgeBase& kb = test::fixture_kb();
  std::vector<SenseCandidate> nine;
  for (int id = 1; id <= 9; ++id) nine.push_back({id, std::nullopt});
  CHECK_THROWS_AS(enumerate_oracle(kb.ontology, kb.lexicon, kb.context, {},
                                   "bank", nine),
                  std::invalid_argument);

  Ontology wide;
  for (int i = 0; i < 13; ++i) wide.nodes.insert("N" + std::to_string(i));
  CHECK_THROWS_AS(
      enumerate_oracle(wide, kb.lexicon, kb.context, {}, "bank", {{1, "N1"}}),
      std::invalid_argument);
}
