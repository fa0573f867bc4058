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

// Per-question disambiguation pipeline: shallow NLP, context-label
// derivation from the unambiguous neighborhood, sense filtering, ontology
// mapping, and the final resolution report. resolve_question is a pure
// function of (text, knowledge base) and never throws on question input.

#ifndef LEXIQ_WSD_HPP_
#define LEXIQ_WSD_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexiq/graph.hpp"
#include "lexiq/kb.hpp"
#include "lexiq/snlp.hpp"

namespace lexiq {

// Labels contributed by the question's unambiguous Noun/Verb headwords:
// each contributes its own lemma plus any configured label aliases.
struct ContextLabelSet {
  std::set<std::string> labels;
  std::map<std::string, std::vector<std::string>> contributors;

  bool operator==(const ContextLabelSet&) const = default;
};

// One sense of the ambiguous word as the context knowledge describes it.
struct ContextCandidate {
  int sense_id = 0;
  std::set<std::string> labels;
  std::optional<std::string> anchor;

  bool operator==(const ContextCandidate&) const = default;
};

struct FilterResult {
  std::vector<ContextCandidate> surviving;
  // True when no label matched and the filter passed everything through.
  bool inconclusive = false;

  bool operator==(const FilterResult&) const = default;
};

enum class ResolutionStatus {
  Unambiguous,         // single sense in the lexicon
  ResolvedByOntology,  // ontology mapping chose a sense
  ResolvedByContext,   // no ontology support; context left exactly one
  FallbackFirstSense,  // several survivors, no support; smallest id reported
  Unknown,             // word absent from the lexicon
};

std::string_view status_name(ResolutionStatus status);

// Everything the pipeline decided about one content headword.
struct WordResolution {
  std::string lemma;
  PosTag pos = PosTag::Noun;
  std::vector<int> candidates;
  std::vector<int> surviving;
  std::optional<int> chosen;
  ResolutionStatus status = ResolutionStatus::Unknown;
  std::map<int, int> support;
  bool context_inconclusive = false;

  bool operator==(const WordResolution&) const = default;
};

// A chunk annotated with the chosen sense of its headword, when one exists.
struct AnnotatedChunk {
  ChunkKind kind = ChunkKind::NP;
  std::string text;
  std::string headword;
  std::optional<int> sense;

  bool operator==(const AnnotatedChunk&) const = default;
};

struct ResolutionReport {
  std::string question;
  std::vector<TaggedToken> tagged;
  std::vector<Chunk> chunks;
  QuestionStructure structure = QuestionStructure::Complex;
  AnswerType answer_type = AnswerType::Unknown;
  QuestionGraph graph;
  std::vector<WordResolution> words;
  std::vector<AnnotatedChunk> resolved_chunks;

  bool operator==(const ResolutionReport&) const = default;
};

struct ResolveOptions {
  // Skips ontology mapping, forcing zero support for every surviving sense;
  // exposes what context filtering achieves on its own.
  bool skip_ontology = false;
};

// Labels from every unambiguous (exactly one sense) Noun/Verb headword other
// than ambiguous_lemma: the lemma itself plus its label aliases. Words with
// no lexicon entry contribute nothing.
ContextLabelSet derive_context_labels(const Headwords& headwords,
                                      const Lexicon& lexicon,
                                      const ContextKnowledge& ctx,
                                      std::string_view ambiguous_lemma);

// A sense survives iff its label set intersects the context labels. When
// nothing survives the filter passes all candidates through and flags the
// result inconclusive.
FilterResult filter_senses(const std::vector<ContextCandidate>& candidates,
                           const ContextLabelSet& context);

// Runs the whole pipeline on one question. Degenerate input produces a
// report with empty fields, never an error.
ResolutionReport resolve_question(std::string_view text,
                                  const KnowledgeBase& kb);
ResolutionReport resolve_question(std::string_view text,
                                  const KnowledgeBase& kb,
                                  const ResolveOptions& options);

}  // namespace lexiq

#endif  // LEXIQ_WSD_HPP_
