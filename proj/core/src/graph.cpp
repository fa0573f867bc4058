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

#include "lexiq/graph.hpp"

#include <set>

#include "lexiq/text.hpp"

namespace lexiq {

namespace {

// Concept a non-ambiguous triple slot denotes: the anchored concept of the
// lemma's unique noun sense when the context knowledge has one, else the
// ontology node whose name matches the lemma case-insensitively.
std::optional<std::string> resolve_slot(const Ontology& onto,
                                        const Lexicon& lexicon,
                                        const ContextKnowledge& ctx,
                                        const std::string& lemma) {
  const LexicalEntry* entry = lexicon.find(lemma, PosTag::Noun);
  if (entry && entry->senses.size() == 1) {
    const ContextRecord* record =
        ctx.find(lemma, PosTag::Noun, entry->senses.front().id);
    if (record && record->concept_anchor) return record->concept_anchor;
  }
  return onto.find_node_ci(lemma);
}

// The relation lemma plus every synonym any lexicon entry for that lemma
// lists, lowercased.
std::set<std::string> relation_names(const Lexicon& lexicon,
                                     const std::string& relation) {
  std::set<std::string> names{relation};
  constexpr PosTag kContent[] = {PosTag::Noun, PosTag::Verb, PosTag::Adjective,
                                 PosTag::Adverb};
  for (PosTag pos : kContent) {
    const LexicalEntry* entry = lexicon.find(relation, pos);
    if (!entry) continue;
    for (const auto& sense : entry->senses) {
      names.insert(sense.synonyms.begin(), sense.synonyms.end());
    }
  }
  return names;
}

}  // namespace

Headwords extract_headwords(const std::vector<Chunk>& chunks,
                            const Lexicon& lexicon) {
  Headwords out;
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    const Chunk& c = chunks[i];
    if (c.kind == ChunkKind::VP) {
      out.relations.push_back({lemmatize(lexicon, c.headword, PosTag::Verb), i});
    } else {
      out.nodes.push_back({lemmatize(lexicon, c.headword, PosTag::Noun), i});
    }
  }
  return out;
}

QuestionGraph build_question_graph(const Headwords& headwords) {
  QuestionGraph graph;
  for (const auto& rel : headwords.relations) {
    const Headword* subject = nullptr;
    for (const auto& node : headwords.nodes) {
      if (node.chunk_index < rel.chunk_index) subject = &node;
    }
    if (!subject) continue;
    for (const auto& node : headwords.nodes) {
      if (node.chunk_index > rel.chunk_index) {
        graph.triples.push_back({subject->lemma, rel.lemma, node.lemma});
      }
    }
  }
  return graph;
}

MappingResult map_sense(const Ontology& onto, const Lexicon& lexicon,
                        const ContextKnowledge& ctx,
                        const QuestionGraph& qgraph,
                        std::string_view ambiguous_lemma,
                        const std::vector<SenseCandidate>& candidates) {
  MappingResult result;
  std::string amb(ambiguous_lemma);

  std::vector<const Triple*> relevant;
  for (const auto& t : qgraph.triples) {
    if (t.subject == amb || t.object == amb) relevant.push_back(&t);
  }
  if (relevant.empty()) return result;  // Word is off-graph: nothing to map.

  for (const auto& candidate : candidates) {
    int support = 0;
    if (candidate.anchor) {
      for (const Triple* t : relevant) {
        std::optional<std::string> subject =
            t->subject == amb ? candidate.anchor
                              : resolve_slot(onto, lexicon, ctx, t->subject);
        std::optional<std::string> object =
            t->object == amb ? candidate.anchor
                             : resolve_slot(onto, lexicon, ctx, t->object);
        if (!subject || !object) continue;

        std::set<std::string> names = relation_names(lexicon, t->relation);
        for (const auto& edge : onto.edges) {
          bool spans = (edge.source == *subject && edge.target == *object) ||
                       (edge.source == *object && edge.target == *subject);
          if (spans && names.count(edge.relation)) {
            result.matched_triples.push_back({edge, *t, candidate.sense_id});
            ++support;
            break;  // Support counts triples, not edges.
          }
        }
      }
    }
    result.per_sense_support[candidate.sense_id] = support;
  }

  for (const auto& [sense_id, support] : result.per_sense_support) {
    if (support < 1) continue;
    if (!result.chosen || support > result.per_sense_support[*result.chosen]) {
      result.chosen = sense_id;
    }
  }
  return result;
}

}  // namespace lexiq
