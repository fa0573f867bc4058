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

// Shallow NLP front end: whitespace tokenization, rule-based part-of-speech
// tagging, NP/VP/PP chunking, and question classification (structure and
// expected answer type). Everything here is a pure function; tagging behavior
// is driven entirely by the TaggerRuleSet and Lexicon passed in.

#ifndef LEXIQ_SNLP_HPP_
#define LEXIQ_SNLP_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lexiq/kb.hpp"
#include "lexiq/pos_tag.hpp"

namespace lexiq {

// One surface word (or punctuation mark) with its 0-based position.
struct Token {
  std::string surface;
  std::size_t index = 0;

  bool operator==(const Token&) const = default;
};

struct TaggedToken {
  Token token;
  PosTag tag = PosTag::Unknown;

  bool operator==(const TaggedToken&) const = default;
};

enum class ChunkKind { NP, VP, PP };

std::string_view chunk_kind_name(ChunkKind kind);

// A contiguous token span [first, last). `head` indexes the headword token:
// the last Noun of an NP/PP, the main Verb of a VP. `headword` is that
// token's lowercased surface (lemmatization happens at graph extraction).
struct Chunk {
  ChunkKind kind = ChunkKind::NP;
  std::size_t first = 0;
  std::size_t last = 0;
  std::size_t head = 0;
  std::string headword;

  bool operator==(const Chunk&) const = default;
};

// Semantic category the answer is expected to have.
enum class AnswerType {
  Person,
  Location,
  Time,
  Reason,
  Manner,
  Quantity,
  Entity,
  Unknown,
};

// Upper-case rendering: PERSON, LOCATION, ...
std::string_view answer_type_name(AnswerType type);

enum class QuestionStructure { Factoid, Complex };

std::string_view structure_name(QuestionStructure structure);

// Splits on whitespace; leading/trailing '?', '.' and ',' on a word are
// split off as their own tokens. Empty text yields an empty list.
std::vector<Token> tokenize(std::string_view text);

// Joins surfaces with single spaces. tokenize(detokenize(t)) == t.
std::string detokenize(const std::vector<Token>& tokens);

// Assigns one tag per token. Priority: pure-punctuation tokens → Punct;
// exact word rule; lexicon lookup when the lemma resolves under exactly one
// content category; first matching suffix rule; the rule set's default.
std::vector<TaggedToken> tag(const std::vector<Token>& tokens,
                             const TaggerRuleSet& rules,
                             const Lexicon& lexicon);

// Greedy longest-match left-to-right chunker over the grammar
//   NP := Det? Adjective* Noun+ | Pron
//   VP := Verb+
//   PP := Prep NP
// Wh-Q, Aux and Punct tokens (and unmatched residue) stay outside chunks.
std::vector<Chunk> chunk(const std::vector<TaggedToken>& tagged);

// The chunk's surface span, single-space joined ("into the bank").
std::string chunk_text(const Chunk& chunk,
                       const std::vector<TaggedToken>& tagged);

// Keyed on the first interrogative word: who/whom → PERSON, where →
// LOCATION, when → TIME, why → REASON, how → MANNER ("how many"/"how much"
// → QUANTITY), what/which → ENTITY. No interrogative → UNKNOWN.
AnswerType classify_answer_type(const std::vector<TaggedToken>& tagged);

// who/where/when/what/which → Factoid; anything else → Complex.
QuestionStructure classify_structure(const std::vector<TaggedToken>& tagged);

}  // namespace lexiq

#endif  // LEXIQ_SNLP_HPP_
