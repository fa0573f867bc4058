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

#include "lexiq/pos_tag.hpp"

namespace lexiq {

std::string_view tag_name(PosTag tag) {
  switch (tag) {
    case PosTag::WhQ: return "Wh-Q";
    case PosTag::Aux: return "Aux";
    case PosTag::Noun: return "Noun";
    case PosTag::Verb: return "Verb";
    case PosTag::Adjective: return "Adjective";
    case PosTag::Adverb: return "Adverb";
    case PosTag::Det: return "Det";
    case PosTag::Prep: return "Prep";
    case PosTag::Pron: return "Pron";
    case PosTag::Punct: return "Punct";
    case PosTag::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::optional<PosTag> parse_tag(std::string_view name) {
  static const PosTag all[] = {
      PosTag::WhQ,  PosTag::Aux,  PosTag::Noun,  PosTag::Verb,
      PosTag::Adjective, PosTag::Adverb, PosTag::Det, PosTag::Prep,
      PosTag::Pron, PosTag::Punct, PosTag::Unknown,
  };
  for (PosTag t : all) {
    if (name == tag_name(t)) return t;
  }
  return std::nullopt;
}

bool is_content_tag(PosTag tag) {
  return tag == PosTag::Noun || tag == PosTag::Verb ||
         tag == PosTag::Adjective || tag == PosTag::Adverb;
}

}  // namespace lexiq
