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

#ifndef LEXIQ_KB_HPP
#define LEXIQ_KB_HPP

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexiq/pos_tag.hpp"

// Knowledge-base data model: the sense lexicon, the per-sense context
// knowledge, the domain concept ontology, and the tagger rule set. All four
// load from line-oriented UTF-8 text files where '#' begins a comment line
// and blank lines are ignored:
//
//   lexicon.kb   lemma|pos|sense_id|gloss[|syn1,syn2,...]
//                !inflect|surface|lemma|pos
//   context.kb   lemma|pos|sense_id|label1,label2,...[|@ConceptName]
//                !alias|lemma|label1,label2,...
//   ontology.kb  node|Name
//                edge|Source|relation_lemma|Target
//   tagger.kb    word|surface|Tag
//                suffix|suffix_string|Tag
//                default|Tag
//
// Context labels may also be written "A & B" inside one comma field; the
// compound is stored as the separate labels {a, b}. Labels, lemmas and
// relation lemmas are case-folded to lowercase on load; concept node names
// keep their spelling. All structures are immutable after load and safe to
// share across concurrent readers.

namespace lexiq {

// Thrown by the loaders; what() carries the offending line number, message()
// just the bare description.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

// One numbered meaning of a lexical entry.
struct Sense {
  int id = 0;
  std::string gloss;
  std::set<std::string> synonyms;  // never contains the entry's own lemma

  bool operator==(const Sense&) const = default;
};

struct LexicalEntry {
  std::string lemma;  // lowercase
  PosTag pos = PosTag::Unknown;
  std::vector<Sense> senses;       // sense ids strictly increasing
  std::set<std::string> inflections;  // surface forms mapping to this lemma

  bool ambiguous() const { return senses.size() >= 2; }
  bool operator==(const LexicalEntry&) const = default;
};

struct Lexicon {
  std::map<std::pair<std::string, PosTag>, LexicalEntry> entries;

  const LexicalEntry* find(std::string_view lemma, PosTag pos) const;
  bool operator==(const Lexicon&) const = default;
};

// Associates one word sense with the context labels under which it applies,
// and optionally with the ontology concept the sense denotes.
struct ContextRecord {
  std::string lemma;  // lowercase
  PosTag pos = PosTag::Unknown;
  int sense_id = 0;
  std::set<std::string> labels;  // lowercase, non-empty
  std::optional<std::string> concept_anchor;

  bool operator==(const ContextRecord&) const = default;
};

struct ContextKnowledge {
  std::vector<ContextRecord> records;
  // Extra labels a lemma contributes when it appears as a neighborhood word.
  std::map<std::string, std::set<std::string>> label_aliases;

  const ContextRecord* find(std::string_view lemma, PosTag pos,
                            int sense_id) const;
  // All records for (lemma, pos) in ascending sense-id order.
  std::vector<const ContextRecord*> records_for(std::string_view lemma,
                                                PosTag pos) const;
  bool operator==(const ContextKnowledge&) const = default;
};

struct OntologyEdge {
  std::string source;
  std::string relation;  // lowercase lemma
  std::string target;

  bool operator==(const OntologyEdge&) const = default;
};

// Domain concept graph: named nodes, labeled directed relation edges.
struct Ontology {
  std::set<std::string> nodes;
  std::vector<OntologyEdge> edges;  // no duplicate triples

  bool has_node(std::string_view name) const;
  // Case-insensitive node lookup; returns the stored spelling.
  std::optional<std::string> find_node_ci(std::string_view name) const;
  bool operator==(const Ontology&) const = default;
};

struct TaggerRuleSet {
  std::map<std::string, PosTag> word_tags;  // lowercase surface -> tag
  std::vector<std::pair<std::string, PosTag>> suffix_rules;  // first match wins
  PosTag default_tag = PosTag::Unknown;

  bool operator==(const TaggerRuleSet&) const = default;
};

struct Finding {
  std::string code;
  std::string message;

  bool operator==(const Finding&) const = default;
};

struct ValidationReport {
  std::vector<Finding> errors;
  std::vector<Finding> warnings;

  bool ok() const { return errors.empty(); }
};

struct KnowledgeBase {
  Lexicon lexicon;
  ContextKnowledge context;
  Ontology ontology;
  TaggerRuleSet tagger;
};

// Loaders. Each throws ParseError on malformed or inconsistent input.
Lexicon load_lexicon(std::istream& source);
ContextKnowledge load_context_knowledge(std::istream& source,
                                        const Lexicon& lexicon);
Ontology load_ontology(std::istream& source);
TaggerRuleSet load_tagger_rules(std::istream& source);

// Loads lexicon.kb, context.kb, ontology.kb and tagger.kb from a directory.
// Does not validate; callers decide what to do with the ValidationReport.
KnowledgeBase load_kb_dir(const std::filesystem::path& dir);

// Cross-checks the three knowledge stores. Errors make the KB unusable for
// resolution: a concept anchor naming a missing node, an ambiguous entry
// with no context records, an edge endpoint missing from the node set, a
// record whose sense is missing from the lexicon. Warnings flag senses of
// ambiguous entries that no concept anchor can confirm, and synonyms that
// resolve to no entry. Never throws.
ValidationReport validate_kb(const Lexicon& lexicon,
                             const ContextKnowledge& context,
                             const Ontology& ontology);

// Senses of (lemma, pos) in sense-id order; empty when the entry is unknown.
// A word is ambiguous iff the result has two or more elements.
std::vector<Sense> lookup_senses(const Lexicon& lexicon,
                                 std::string_view lemma, PosTag pos);

// Maps a surface form to an entry lemma: exact lemma match, then inflection
// sets, then suffix stripping ("ies"->"y", "es", "s", then "ing" and "ed"
// with and without restoring a final "e") with a lookup retry after each
// strip. Falls back to the lowercased surface. Idempotent.
std::string lemmatize(const Lexicon& lexicon, std::string_view surface,
                      PosTag pos);

// Writers emitting the same formats the loaders accept; reloading the
// output reproduces the in-memory structure exactly.
std::string serialize_lexicon(const Lexicon& lexicon);
std::string serialize_context_knowledge(const ContextKnowledge& context);
std::string serialize_ontology(const Ontology& ontology);
std::string serialize_tagger_rules(const TaggerRuleSet& rules);

}  // namespace lexiq

#endif  // LEXIQ_KB_HPP
