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

#include "lexiq/oracle.hpp"

#include <stdexcept>

#include "lexiq/text.hpp"

namespace lexiq {

namespace {

// True when `name` is the relation lemma itself or appears among the
// synonyms of any lexicon entry for that lemma. Scans the lexicon afresh on
// every call — this file trades speed for being a transcription of the
// definitions.
bool names_relation(const Lexicon& lexicon, const std::string& relation,
                    const std::string& name) {
  if (name == relation) return true;
  for (const auto& [key, entry] : lexicon.entries) {
    if (key.first != relation) continue;
    for (const auto& sense : entry.senses) {
      for (const auto& syn : sense.synonyms) {
        if (name == syn) return true;
      }
    }
  }
  return false;
}

// Concept for a slot holding `lemma` under `candidate`: the candidate's
// anchor when the slot is the ambiguous word; otherwise the anchored concept
// of the lemma's unique noun sense, else a case-insensitive node-name match.
std::optional<std::string> slot_concept(const Ontology& onto,
                                        const Lexicon& lexicon,
                                        const ContextKnowledge& ctx,
                                        const std::string& amb,
                                        const SenseCandidate& candidate,
                                        const std::string& lemma) {
  if (lemma == amb) return candidate.anchor;

  int sense_count = 0;
  int only_sense = 0;
  for (const auto& [key, entry] : lexicon.entries) {
    if (key.first != lemma || key.second != PosTag::Noun) continue;
    sense_count = static_cast<int>(entry.senses.size());
    if (sense_count == 1) only_sense = entry.senses.front().id;
  }
  if (sense_count == 1) {
    for (const auto& record : ctx.records) {
      if (record.lemma == lemma && record.pos == PosTag::Noun &&
          record.sense_id == only_sense) {
        if (record.concept_anchor) return record.concept_anchor;
        break;  // A record without an anchor settles it: fall through.
      }
    }
  }
  for (const auto& node : onto.nodes) {
    if (to_lower(node) == to_lower(lemma)) return node;
  }
  return std::nullopt;
}

}  // namespace

MappingResult enumerate_oracle(const Ontology& onto, const Lexicon& lexicon,
                               const ContextKnowledge& ctx,
                               const QuestionGraph& qgraph,
                               std::string_view ambiguous_lemma,
                               const std::vector<SenseCandidate>& candidates) {
  if (candidates.size() > 8 || onto.nodes.size() > 12) {
    throw std::invalid_argument("enumerate_oracle: input beyond desk scale");
  }

  MappingResult result;
  std::string amb(ambiguous_lemma);

  bool amb_in_graph = false;
  for (const auto& t : qgraph.triples) {
    amb_in_graph = amb_in_graph || t.subject == amb || t.object == amb;
  }
  if (!amb_in_graph) return result;

  for (const auto& candidate : candidates) {
    int support = 0;
    for (const auto& t : qgraph.triples) {
      if (t.subject != amb && t.object != amb) continue;
      if (!candidate.anchor) continue;

      auto subject = slot_concept(onto, lexicon, ctx, amb, candidate, t.subject);
      auto object = slot_concept(onto, lexicon, ctx, amb, candidate, t.object);
      if (!subject || !object) continue;

      for (const auto& edge : onto.edges) {
        bool forward = edge.source == *subject && edge.target == *object;
        bool backward = edge.source == *object && edge.target == *subject;
        if ((forward || backward) &&
            names_relation(lexicon, t.relation, edge.relation)) {
          result.matched_triples.push_back({edge, t, candidate.sense_id});
          ++support;
          break;
        }
      }
    }
    result.per_sense_support[candidate.sense_id] = support;
  }

  int best_support = 0;
  int best_sense = 0;
  for (const auto& [sense_id, support] : result.per_sense_support) {
    bool better = support > best_support ||
                  (support == best_support && best_support >= 1 &&
                   sense_id < best_sense);
    if (better) {
      best_support = support;
      best_sense = sense_id;
    }
  }
  if (best_support >= 1) result.chosen = best_sense;
  return result;
}

}  // namespace lexiq
