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

// Question-graph construction and ontology mapping: chunk headwords become
// nodes (noun heads) and relations (verb heads), relations are expanded into
// subject–relation–object triples, and a candidate sense of an ambiguous
// word is confirmed when substituting its concept anchor yields a triple
// the ontology contains as an edge.

#ifndef LEXIQ_GRAPH_HPP_
#define LEXIQ_GRAPH_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexiq/kb.hpp"
#include "lexiq/snlp.hpp"

namespace lexiq {

// A lemmatized chunk headword together with the chunk it came from.
struct Headword {
  std::string lemma;
  std::size_t chunk_index = 0;

  bool operator==(const Headword&) const = default;
};

// NP/PP heads are graph nodes; VP heads are relations. Both preserve chunk
// order.
struct Headwords {
  std::vector<Headword> nodes;
  std::vector<Headword> relations;

  bool operator==(const Headwords&) const = default;
};

struct Triple {
  std::string subject;
  std::string relation;
  std::string object;

  bool operator==(const Triple&) const = default;
};

struct QuestionGraph {
  std::vector<Triple> triples;

  bool operator==(const QuestionGraph&) const = default;
};

// A sense of the ambiguous word offered to the mapper; `anchor` is the
// ontology node that sense denotes, when the context knowledge names one.
struct SenseCandidate {
  int sense_id = 0;
  std::optional<std::string> anchor;

  bool operator==(const SenseCandidate&) const = default;
};

// Evidence: this ontology edge confirmed this question triple under the
// given candidate sense.
struct MatchedTriple {
  OntologyEdge edge;
  Triple triple;
  int sense_id = 0;

  bool operator==(const MatchedTriple&) const = default;
};

struct MappingResult {
  // Present iff some sense has support >= 1; maximizes support, ties broken
  // by the smallest sense id.
  std::optional<int> chosen;
  std::vector<MatchedTriple> matched_triples;
  // Sense id -> number of question triples confirmed by the ontology. Empty
  // when the ambiguous word occurs in no triple.
  std::map<int, int> per_sense_support;

  bool operator==(const MappingResult&) const = default;
};

// NP/PP headwords become nodes, VP headwords relations; lemmas via
// kb.lemmatize (nouns as Noun, verbs as Verb).
Headwords extract_headwords(const std::vector<Chunk>& chunks,
                            const Lexicon& lexicon);

// For each relation at chunk index k: subject is the nearest node before k,
// and one triple is emitted per node after k. A relation with no preceding
// node yields nothing.
QuestionGraph build_question_graph(const Headwords& headwords);

// Decides the ambiguous word's sense. For every triple containing
// ambiguous_lemma, each candidate's anchor is substituted into the ambiguous
// slot; the other slot resolves through the anchored concept of its unique
// sense, else by case-insensitive node-name match. The relation matches an
// edge by its lemma or any lexicon synonym of that lemma, in either edge
// direction. Support counts confirmed triples per sense.
MappingResult map_sense(const Ontology& onto, const Lexicon& lexicon,
                        const ContextKnowledge& ctx,
                        const QuestionGraph& qgraph,
                        std::string_view ambiguous_lemma,
                        const std::vector<SenseCandidate>& candidates);

}  // namespace lexiq

#endif  // LEXIQ_GRAPH_HPP_
