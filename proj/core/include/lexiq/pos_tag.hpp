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

#ifndef LEXIQ_POS_TAG_HPP
#define LEXIQ_POS_TAG_HPP

#include <optional>
#include <string>
#include <string_view>

namespace lexiq {

// Part-of-speech classes assigned by the rule tagger. Content words carry
// one of Noun/Verb/Adjective/Adverb; the rest are function-word classes.
enum class PosTag {
  WhQ,  // interrogative (who, how, ...)
  Aux,
  Noun,
  Verb,
  Adjective,
  Adverb,
  Det,
  Prep,
  Pron,
  Punct,
  Unknown,
};

// Canonical spelling used in KB files and machine-readable reports.
std::string_view tag_name(PosTag tag);

// Inverse of tag_name; nullopt for unrecognized spellings.
std::optional<PosTag> parse_tag(std::string_view name);

bool is_content_tag(PosTag tag);

}  // namespace lexiq

#endif  // LEXIQ_POS_TAG_HPP
