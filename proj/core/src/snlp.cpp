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

#include "lexiq/snlp.hpp"

#include <array>
#include <cctype>

#include "lexiq/text.hpp"

namespace lexiq {

namespace {

constexpr std::string_view kPunctChars = "?.,";

bool is_punct_char(char c) {
  return kPunctChars.find(c) != std::string_view::npos;
}

bool all_punct(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!is_punct_char(c)) return false;
  }
  return true;
}

// Interrogative keyword of the question: the first token tagged Wh-Q, or
// failing that the first token whose surface is a wh-word. Returns the
// position, or npos when the question has none.
constexpr std::array<std::string_view, 8> kWhWords = {
    "who", "whom", "where", "when", "why", "how", "what", "which"};

std::size_t interrogative_index(const std::vector<TaggedToken>& tagged) {
  for (const auto& t : tagged) {
    if (t.tag == PosTag::WhQ) return t.token.index;
  }
  for (const auto& t : tagged) {
    std::string lower = to_lower(t.token.surface);
    for (auto wh : kWhWords) {
      if (lower == wh) return t.token.index;
    }
  }
  return std::string::npos;
}

}  // namespace

std::string_view chunk_kind_name(ChunkKind kind) {
  switch (kind) {
    case ChunkKind::NP:
      return "NP";
    case ChunkKind::VP:
      return "VP";
    case ChunkKind::PP:
      return "PP";
  }
  return "NP";
}

std::string_view answer_type_name(AnswerType type) {
  switch (type) {
    case AnswerType::Person:
      return "PERSON";
    case AnswerType::Location:
      return "LOCATION";
    case AnswerType::Time:
      return "TIME";
    case AnswerType::Reason:
      return "REASON";
    case AnswerType::Manner:
      return "MANNER";
    case AnswerType::Quantity:
      return "QUANTITY";
    case AnswerType::Entity:
      return "ENTITY";
    case AnswerType::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string_view structure_name(QuestionStructure structure) {
  return structure == QuestionStructure::Factoid ? "Factoid" : "Complex";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  auto emit = [&](std::string_view surface) {
    tokens.push_back({std::string(surface), tokens.size()});
  };

  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::string_view word = text.substr(start, i - start);
    if (word.empty()) continue;

    // Peel leading and trailing punctuation into separate tokens.
    std::size_t lead = 0;
    while (lead < word.size() && is_punct_char(word[lead])) ++lead;
    std::size_t tail = word.size();
    while (tail > lead && is_punct_char(word[tail - 1])) --tail;

    for (std::size_t k = 0; k < lead; ++k) emit(word.substr(k, 1));
    if (tail > lead) emit(word.substr(lead, tail - lead));
    for (std::size_t k = tail; k < word.size(); ++k) emit(word.substr(k, 1));
  }
  return tokens;
}

std::string detokenize(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.surface;
  }
  return out;
}

std::vector<TaggedToken> tag(const std::vector<Token>& tokens,
                             const TaggerRuleSet& rules,
                             const Lexicon& lexicon) {
  std::vector<TaggedToken> tagged;
  tagged.reserve(tokens.size());

  for (const auto& token : tokens) {
    std::string lower = to_lower(token.surface);
    PosTag tag = rules.default_tag;

    if (all_punct(lower)) {
      tag = PosTag::Punct;
    } else if (auto it = rules.word_tags.find(lower);
               it != rules.word_tags.end()) {
      tag = it->second;
    } else {
      // Lexicon vote: decisive only when the lemma resolves under exactly
      // one content category.
      constexpr PosTag kContent[] = {PosTag::Noun, PosTag::Verb,
                                     PosTag::Adjective, PosTag::Adverb};
      PosTag hit = PosTag::Unknown;
      int hits = 0;
      for (PosTag pos : kContent) {
        if (lexicon.find(lemmatize(lexicon, lower, pos), pos)) {
          hit = pos;
          ++hits;
        }
      }
      if (hits == 1) {
        tag = hit;
      } else {
        bool matched = false;
        for (const auto& [suffix, suffix_tag] : rules.suffix_rules) {
          if (lower.size() > suffix.size() && lower.ends_with(suffix)) {
            tag = suffix_tag;
            matched = true;
            break;
          }
        }
        if (!matched) tag = rules.default_tag;
      }
    }
    tagged.push_back({token, tag});
  }
  return tagged;
}

namespace {

// Parses NP := Det? Adjective* Noun+ | Pron at position i. On success fills
// (end, head) and returns true.
bool parse_np(const std::vector<TaggedToken>& tagged, std::size_t i,
              std::size_t& end, std::size_t& head) {
  if (i >= tagged.size()) return false;
  if (tagged[i].tag == PosTag::Pron) {
    end = i + 1;
    head = i;
    return true;
  }
  std::size_t j = i;
  if (tagged[j].tag == PosTag::Det) ++j;
  while (j < tagged.size() && tagged[j].tag == PosTag::Adjective) ++j;
  if (j >= tagged.size() || tagged[j].tag != PosTag::Noun) return false;
  while (j < tagged.size() && tagged[j].tag == PosTag::Noun) ++j;
  end = j;
  head = j - 1;
  return true;
}

}  // namespace

std::vector<Chunk> chunk(const std::vector<TaggedToken>& tagged) {
  std::vector<Chunk> chunks;
  auto emit = [&](ChunkKind kind, std::size_t first, std::size_t last,
                  std::size_t head) {
    chunks.push_back(
        {kind, first, last, head, to_lower(tagged[head].token.surface)});
  };

  std::size_t i = 0;
  while (i < tagged.size()) {
    std::size_t end = 0;
    std::size_t head = 0;
    switch (tagged[i].tag) {
      case PosTag::Prep:
        if (parse_np(tagged, i + 1, end, head)) {
          emit(ChunkKind::PP, i, end, head);
          i = end;
          continue;
        }
        break;
      case PosTag::Det:
      case PosTag::Adjective:
      case PosTag::Noun:
      case PosTag::Pron:
        if (parse_np(tagged, i, end, head)) {
          emit(ChunkKind::NP, i, end, head);
          i = end;
          continue;
        }
        break;
      case PosTag::Verb: {
        std::size_t j = i;
        while (j < tagged.size() && tagged[j].tag == PosTag::Verb) ++j;
        emit(ChunkKind::VP, i, j, j - 1);
        i = j;
        continue;
      }
      default:
        break;  // Wh-Q, Aux, Punct, Adverb, Unknown: chunk-external.
    }
    ++i;
  }
  return chunks;
}

std::string chunk_text(const Chunk& chunk,
                       const std::vector<TaggedToken>& tagged) {
  std::string out;
  for (std::size_t i = chunk.first; i < chunk.last; ++i) {
    if (!out.empty()) out += ' ';
    out += tagged[i].token.surface;
  }
  return out;
}

AnswerType classify_answer_type(const std::vector<TaggedToken>& tagged) {
  std::size_t at = interrogative_index(tagged);
  if (at == std::string::npos) return AnswerType::Unknown;
  std::string wh = to_lower(tagged[at].token.surface);

  if (wh == "who" || wh == "whom") return AnswerType::Person;
  if (wh == "where") return AnswerType::Location;
  if (wh == "when") return AnswerType::Time;
  if (wh == "why") return AnswerType::Reason;
  if (wh == "how") {
    if (at + 1 < tagged.size()) {
      std::string next = to_lower(tagged[at + 1].token.surface);
      if (next == "many" || next == "much") return AnswerType::Quantity;
    }
    return AnswerType::Manner;
  }
  if (wh == "what" || wh == "which") return AnswerType::Entity;
  return AnswerType::Unknown;
}

QuestionStructure classify_structure(const std::vector<TaggedToken>& tagged) {
  std::size_t at = interrogative_index(tagged);
  if (at == std::string::npos) return QuestionStructure::Complex;
  std::string wh = to_lower(tagged[at].token.surface);
  if (wh == "who" || wh == "where" || wh == "when" || wh == "what" ||
      wh == "which") {
    return QuestionStructure::Factoid;
  }
  return QuestionStructure::Complex;
}

}  // namespace lexiq
