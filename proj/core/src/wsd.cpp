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

#include "lexiq/wsd.hpp"

#include <algorithm>

namespace lexiq {

std::string_view status_name(ResolutionStatus status) {
  switch (status) {
    case ResolutionStatus::Unambiguous:
      return "Unambiguous";
    case ResolutionStatus::ResolvedByOntology:
      return "ResolvedByOntology";
    case ResolutionStatus::ResolvedByContext:
      return "ResolvedByContext";
    case ResolutionStatus::FallbackFirstSense:
      return "FallbackFirstSense";
    case ResolutionStatus::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

ContextLabelSet derive_context_labels(const Headwords& headwords,
                                      const Lexicon& lexicon,
                                      const ContextKnowledge& ctx,
                                      std::string_view ambiguous_lemma) {
  ContextLabelSet out;
  std::set<std::string> seen;

  auto contribute = [&](const Headword& word, PosTag pos) {
    if (word.lemma == ambiguous_lemma || !seen.insert(word.lemma).second) {
      return;
    }
    const LexicalEntry* entry = lexicon.find(word.lemma, pos);
    if (!entry || entry->senses.size() != 1) return;

    std::set<std::string> labels{word.lemma};
    if (auto it = ctx.label_aliases.find(word.lemma);
        it != ctx.label_aliases.end()) {
      labels.insert(it->second.begin(), it->second.end());
    }
    for (const auto& label : labels) {
      out.labels.insert(label);
      out.contributors[label].push_back(word.lemma);
    }
  };

  for (const auto& node : headwords.nodes) contribute(node, PosTag::Noun);
  for (const auto& rel : headwords.relations) contribute(rel, PosTag::Verb);
  return out;
}

FilterResult filter_senses(const std::vector<ContextCandidate>& candidates,
                           const ContextLabelSet& context) {
  FilterResult result;
  for (const auto& candidate : candidates) {
    bool intersects =
        std::any_of(candidate.labels.begin(), candidate.labels.end(),
                    [&](const std::string& label) {
                      return context.labels.count(label) > 0;
                    });
    if (intersects) result.surviving.push_back(candidate);
  }
  if (result.surviving.empty()) {
    result.surviving = candidates;
    result.inconclusive = true;
  }
  return result;
}

namespace {

WordResolution resolve_word(const std::string& lemma, PosTag pos,
                            const KnowledgeBase& kb,
                            const Headwords& headwords,
                            const QuestionGraph& graph,
                            const ResolveOptions& options) {
  WordResolution word;
  word.lemma = lemma;
  word.pos = pos;

  std::vector<Sense> senses = lookup_senses(kb.lexicon, lemma, pos);
  for (const auto& sense : senses) word.candidates.push_back(sense.id);

  if (senses.empty()) {
    word.status = ResolutionStatus::Unknown;
    return word;
  }
  if (senses.size() == 1) {
    word.surviving = word.candidates;
    word.chosen = word.candidates.front();
    word.status = ResolutionStatus::Unambiguous;
    return word;
  }

  ContextLabelSet context =
      derive_context_labels(headwords, kb.lexicon, kb.context, lemma);
  std::vector<ContextCandidate> candidates;
  for (const auto& sense : senses) {
    ContextCandidate candidate;
    candidate.sense_id = sense.id;
    if (const ContextRecord* record = kb.context.find(lemma, pos, sense.id)) {
      candidate.labels = record->labels;
      candidate.anchor = record->concept_anchor;
    }
    candidates.push_back(std::move(candidate));
  }

  FilterResult filtered = filter_senses(candidates, context);
  word.context_inconclusive = filtered.inconclusive;
  for (const auto& survivor : filtered.surviving) {
    word.surviving.push_back(survivor.sense_id);
  }

  if (options.skip_ontology) {
    for (int id : word.surviving) word.support[id] = 0;
  } else {
    std::vector<SenseCandidate> mappable;
    for (const auto& survivor : filtered.surviving) {
      mappable.push_back({survivor.sense_id, survivor.anchor});
    }
    MappingResult mapping = map_sense(kb.ontology, kb.lexicon, kb.context,
                                      graph, lemma, mappable);
    word.support = mapping.per_sense_support;
    if (mapping.chosen) {
      word.chosen = mapping.chosen;
      word.status = ResolutionStatus::ResolvedByOntology;
      return word;
    }
  }

  if (word.surviving.size() == 1) {
    word.chosen = word.surviving.front();
    word.status = ResolutionStatus::ResolvedByContext;
  } else {
    word.chosen = *std::min_element(word.surviving.begin(),
                                    word.surviving.end());
    word.status = ResolutionStatus::FallbackFirstSense;
  }
  return word;
}

}  // namespace

ResolutionReport resolve_question(std::string_view text,
                                  const KnowledgeBase& kb) {
  return resolve_question(text, kb, ResolveOptions{});
}

ResolutionReport resolve_question(std::string_view text,
                                  const KnowledgeBase& kb,
                                  const ResolveOptions& options) {
  ResolutionReport report;
  report.question = std::string(text);
  report.tagged = tag(tokenize(text), kb.tagger, kb.lexicon);
  report.chunks = chunk(report.tagged);
  report.structure = classify_structure(report.tagged);
  report.answer_type = classify_answer_type(report.tagged);

  Headwords headwords = extract_headwords(report.chunks, kb.lexicon);
  report.graph = build_question_graph(headwords);

  // One resolution per distinct headword lemma, nodes before relations.
  std::set<std::string> seen;
  auto resolve = [&](const Headword& headword, PosTag pos) {
    if (!seen.insert(headword.lemma).second) return;
    report.words.push_back(resolve_word(headword.lemma, pos, kb, headwords,
                                        report.graph, options));
  };
  for (const auto& node : headwords.nodes) resolve(node, PosTag::Noun);
  for (const auto& rel : headwords.relations) resolve(rel, PosTag::Verb);

  for (const auto& c : report.chunks) {
    AnnotatedChunk annotated;
    annotated.kind = c.kind;
    annotated.text = chunk_text(c, report.tagged);
    annotated.headword = lemmatize(
        kb.lexicon, c.headword,
        c.kind == ChunkKind::VP ? PosTag::Verb : PosTag::Noun);
    for (const auto& word : report.words) {
      if (word.lemma == annotated.headword) {
        annotated.sense = word.chosen;
        break;
      }
    }
    report.resolved_chunks.push_back(std::move(annotated));
  }
  return report;
}

}  // namespace lexiq
