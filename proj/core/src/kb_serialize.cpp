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

// Writers that emit the same line-oriented form the loaders read, so that
// load(serialize(kb)) == kb.

#include <sstream>

#include "lexiq/kb.hpp"

namespace lexiq {

namespace {

std::string join(const std::set<std::string>& items, const char* sep) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += sep;
    out += item;
  }
  return out;
}

}  // namespace

std::string serialize_lexicon(const Lexicon& lexicon) {
  std::ostringstream os;
  for (const auto& [key, entry] : lexicon.entries) {
    for (const auto& sense : entry.senses) {
      os << entry.lemma << "|" << tag_name(entry.pos) << "|" << sense.id << "|"
         << sense.gloss;
      if (!sense.synonyms.empty()) os << "|" << join(sense.synonyms, ",");
      os << "\n";
    }
  }
  for (const auto& [key, entry] : lexicon.entries) {
    for (const auto& surface : entry.inflections) {
      os << "!inflect|" << surface << "|" << entry.lemma << "|"
         << tag_name(entry.pos) << "\n";
    }
  }
  return os.str();
}

std::string serialize_context_knowledge(const ContextKnowledge& context) {
  std::ostringstream os;
  for (const auto& r : context.records) {
    os << r.lemma << "|" << tag_name(r.pos) << "|" << r.sense_id << "|"
       << join(r.labels, ",");
    if (r.concept_anchor) os << "|@" << *r.concept_anchor;
    os << "\n";
  }
  for (const auto& [lemma, labels] : context.label_aliases) {
    os << "!alias|" << lemma << "|" << join(labels, ",") << "\n";
  }
  return os.str();
}

std::string serialize_ontology(const Ontology& ontology) {
  std::ostringstream os;
  for (const auto& node : ontology.nodes) os << "node|" << node << "\n";
  for (const auto& e : ontology.edges) {
    os << "edge|" << e.source << "|" << e.relation << "|" << e.target << "\n";
  }
  return os.str();
}

std::string serialize_tagger_rules(const TaggerRuleSet& rules) {
  std::ostringstream os;
  for (const auto& [surface, tag] : rules.word_tags) {
    os << "word|" << surface << "|" << tag_name(tag) << "\n";
  }
  for (const auto& [suffix, tag] : rules.suffix_rules) {
    os << "suffix|" << suffix << "|" << tag_name(tag) << "\n";
  }
  os << "default|" << tag_name(rules.default_tag) << "\n";
  return os.str();
}

}  // namespace lexiq
