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

#include "lexiq/kb.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lexiq/text.hpp"

namespace lexiq {

namespace {

std::string compose_what(std::size_t line, const std::string& message) {
  std::ostringstream os;
  os << "line " << line << ": " << message;
  return os.str();
}

// Splits a raw line into trimmed '|' fields; returns false for lines the
// loaders skip (blank or comment).
bool fields_of(const std::string& raw, std::vector<std::string>& out) {
  std::string line = trim(raw);
  if (line.empty() || line.front() == '#') return false;
  out.clear();
  for (auto& f : split(line, '|')) out.push_back(trim(f));
  return true;
}

bool single_token(std::string_view s) {
  if (s.empty()) return false;
  return s.find_first_of(" \t") == std::string_view::npos;
}

PosTag parse_pos_field(const std::string& field, std::size_t line) {
  auto tag = parse_tag(field);
  if (!tag) throw ParseError(line, "unknown part-of-speech tag '" + field + "'");
  return *tag;
}

PosTag parse_content_pos_field(const std::string& field, std::size_t line) {
  PosTag tag = parse_pos_field(field, line);
  if (!is_content_tag(tag)) {
    throw ParseError(line, "'" + field + "' is not a content category");
  }
  return tag;
}

int parse_sense_id_field(const std::string& field, std::size_t line) {
  std::size_t used = 0;
  int id = 0;
  try {
    id = std::stoi(field, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "sense id '" + field + "' is not a number");
  }
  if (used != field.size() || id < 1) {
    throw ParseError(line, "sense id '" + field + "' must be a positive integer");
  }
  return id;
}

std::string parse_lemma_field(const std::string& field, std::size_t line) {
  if (!single_token(field)) {
    throw ParseError(line, "lemma '" + field + "' must be a single token");
  }
  return to_lower(field);
}

// "Money, Deposit" -> {money, deposit}; "Money & Play" -> {money, play}.
std::set<std::string> parse_labels_field(const std::string& field,
                                         std::size_t line) {
  std::set<std::string> labels;
  for (const auto& piece : split(field, ',')) {
    for (const auto& part : split(piece, '&')) {
      std::string label = to_lower(trim(part));
      if (!single_token(label)) {
        throw ParseError(line, "malformed context label '" + trim(part) + "'");
      }
      labels.insert(label);
    }
  }
  if (labels.empty()) throw ParseError(line, "empty context label list");
  return labels;
}

std::set<std::string> parse_synonyms_field(const std::string& field,
                                           const std::string& own_lemma,
                                           std::size_t line) {
  std::set<std::string> synonyms;
  if (trim(field).empty()) return synonyms;
  for (const auto& piece : split(field, ',')) {
    std::string syn = to_lower(trim(piece));
    if (!single_token(syn)) {
      throw ParseError(line, "malformed synonym '" + trim(piece) + "'");
    }
    if (syn == own_lemma) continue;  // an entry never lists itself
    synonyms.insert(syn);
  }
  return synonyms;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(compose_what(line, message)),
      line_(line),
      message_(message) {}

const LexicalEntry* Lexicon::find(std::string_view lemma, PosTag pos) const {
  auto it = entries.find({std::string(lemma), pos});
  return it == entries.end() ? nullptr : &it->second;
}

const ContextRecord* ContextKnowledge::find(std::string_view lemma, PosTag pos,
                                            int sense_id) const {
  for (const auto& r : records) {
    if (r.lemma == lemma && r.pos == pos && r.sense_id == sense_id) return &r;
  }
  return nullptr;
}

std::vector<const ContextRecord*> ContextKnowledge::records_for(
    std::string_view lemma, PosTag pos) const {
  std::vector<const ContextRecord*> out;
  for (const auto& r : records) {
    if (r.lemma == lemma && r.pos == pos) out.push_back(&r);
  }
  std::sort(out.begin(), out.end(),
            [](const ContextRecord* a, const ContextRecord* b) {
              return a->sense_id < b->sense_id;
            });
  return out;
}

bool Ontology::has_node(std::string_view name) const {
  return nodes.count(std::string(name)) > 0;
}

std::optional<std::string> Ontology::find_node_ci(std::string_view name) const {
  for (const auto& node : nodes) {
    if (iequals(node, name)) return node;
  }
  return std::nullopt;
}

Lexicon load_lexicon(std::istream& source) {
  Lexicon lexicon;
  std::string raw;
  std::vector<std::string> f;
  std::size_t line_no = 0;
  // Sense lines of one entry must be contiguous; a key that reappears later
  // is a duplicate entry, not a continuation.
  std::optional<std::pair<std::string, PosTag>> current;

  while (std::getline(source, raw)) {
    ++line_no;
    if (!fields_of(raw, f)) continue;

    if (f[0] == "!inflect") {
      if (f.size() != 4) {
        throw ParseError(line_no, "expected !inflect|surface|lemma|pos");
      }
      std::string surface = parse_lemma_field(f[1], line_no);
      std::string lemma = parse_lemma_field(f[2], line_no);
      PosTag pos = parse_content_pos_field(f[3], line_no);
      auto it = lexicon.entries.find({lemma, pos});
      if (it == lexicon.entries.end()) {
        throw ParseError(line_no, "inflection target '" + lemma + "/" +
                                      std::string(tag_name(pos)) +
                                      "' has no senses");
      }
      it->second.inflections.insert(surface);
      continue;
    }

    if (f.size() < 4 || f.size() > 5) {
      throw ParseError(line_no,
                       "expected lemma|pos|sense_id|gloss[|synonyms]");
    }
    std::string lemma = parse_lemma_field(f[0], line_no);
    PosTag pos = parse_content_pos_field(f[1], line_no);
    int sense_id = parse_sense_id_field(f[2], line_no);
    std::string gloss = f[3];
    std::set<std::string> synonyms =
        f.size() == 5 ? parse_synonyms_field(f[4], lemma, line_no)
                      : std::set<std::string>{};

    std::pair<std::string, PosTag> key{lemma, pos};
    auto it = lexicon.entries.find(key);
    if (it != lexicon.entries.end()) {
      if (!current || *current != key) {
        throw ParseError(line_no, "duplicate entry for '" + lemma + "/" +
                                      std::string(tag_name(pos)) + "'");
      }
      LexicalEntry& entry = it->second;
      if (sense_id <= entry.senses.back().id) {
        throw ParseError(line_no, "sense ids of '" + lemma +
                                      "' must be strictly increasing");
      }
      entry.senses.push_back({sense_id, gloss, std::move(synonyms)});
    } else {
      LexicalEntry entry;
      entry.lemma = lemma;
      entry.pos = pos;
      entry.senses.push_back({sense_id, gloss, std::move(synonyms)});
      lexicon.entries.emplace(key, std::move(entry));
    }
    current = key;
  }
  return lexicon;
}

ContextKnowledge load_context_knowledge(std::istream& source,
                                        const Lexicon& lexicon) {
  ContextKnowledge ctx;
  std::string raw;
  std::vector<std::string> f;
  std::size_t line_no = 0;

  while (std::getline(source, raw)) {
    ++line_no;
    if (!fields_of(raw, f)) continue;

    if (f[0] == "!alias") {
      if (f.size() != 3) {
        throw ParseError(line_no, "expected !alias|lemma|labels");
      }
      std::string lemma = parse_lemma_field(f[1], line_no);
      auto labels = parse_labels_field(f[2], line_no);
      ctx.label_aliases[lemma].insert(labels.begin(), labels.end());
      continue;
    }

    if (f.size() < 4 || f.size() > 5) {
      throw ParseError(line_no,
                       "expected lemma|pos|sense_id|labels[|@Concept]");
    }
    ContextRecord record;
    record.lemma = parse_lemma_field(f[0], line_no);
    record.pos = parse_content_pos_field(f[1], line_no);
    record.sense_id = parse_sense_id_field(f[2], line_no);
    record.labels = parse_labels_field(f[3], line_no);
    if (f.size() == 5) {
      if (f[4].size() < 2 || f[4][0] != '@' ||
          !single_token(f[4].substr(1))) {
        throw ParseError(line_no, "malformed concept anchor '" + f[4] + "'");
      }
      record.concept_anchor = f[4].substr(1);
    }

    const LexicalEntry* entry = lexicon.find(record.lemma, record.pos);
    bool known_sense = false;
    if (entry) {
      for (const auto& s : entry->senses) known_sense |= s.id == record.sense_id;
    }
    if (!known_sense) {
      std::ostringstream os;
      os << "dangling sense reference " << record.lemma << "/"
         << tag_name(record.pos) << "#" << record.sense_id;
      throw ParseError(line_no, os.str());
    }
    if (ctx.find(record.lemma, record.pos, record.sense_id)) {
      std::ostringstream os;
      os << "duplicate context record for " << record.lemma << "/"
         << tag_name(record.pos) << "#" << record.sense_id;
      throw ParseError(line_no, os.str());
    }
    ctx.records.push_back(std::move(record));
  }
  return ctx;
}

Ontology load_ontology(std::istream& source) {
  Ontology onto;
  struct PendingEdge {
    OntologyEdge edge;
    std::size_t line;
  };
  std::vector<PendingEdge> pending;
  std::string raw;
  std::vector<std::string> f;
  std::size_t line_no = 0;

  // Two passes over the content: nodes may be declared after the edges that
  // use them.
  while (std::getline(source, raw)) {
    ++line_no;
    if (!fields_of(raw, f)) continue;

    if (f[0] == "node") {
      if (f.size() != 2 || !single_token(f[1])) {
        throw ParseError(line_no, "expected node|Name");
      }
      onto.nodes.insert(f[1]);
    } else if (f[0] == "edge") {
      if (f.size() != 4 || !single_token(f[1]) || !single_token(f[3])) {
        throw ParseError(line_no, "expected edge|Source|relation|Target");
      }
      OntologyEdge edge{f[1], parse_lemma_field(f[2], line_no), f[3]};
      pending.push_back({std::move(edge), line_no});
    } else {
      throw ParseError(line_no, "expected a node or edge line");
    }
  }

  for (auto& p : pending) {
    for (const auto& end : {p.edge.source, p.edge.target}) {
      if (!onto.has_node(end)) {
        throw ParseError(p.line, "edge references undeclared node '" + end + "'");
      }
    }
    for (const auto& e : onto.edges) {
      if (e == p.edge) {
        throw ParseError(p.line, "duplicate edge " + p.edge.source + " -" +
                                     p.edge.relation + "-> " + p.edge.target);
      }
    }
    onto.edges.push_back(std::move(p.edge));
  }
  return onto;
}

TaggerRuleSet load_tagger_rules(std::istream& source) {
  TaggerRuleSet rules;
  std::string raw;
  std::vector<std::string> f;
  std::size_t line_no = 0;
  bool have_default = false;

  while (std::getline(source, raw)) {
    ++line_no;
    if (!fields_of(raw, f)) continue;

    if (f[0] == "word") {
      if (f.size() != 3) throw ParseError(line_no, "expected word|surface|Tag");
      std::string surface = parse_lemma_field(f[1], line_no);
      PosTag tag = parse_pos_field(f[2], line_no);
      if (!rules.word_tags.emplace(surface, tag).second) {
        throw ParseError(line_no, "duplicate word rule for '" + surface + "'");
      }
    } else if (f[0] == "suffix") {
      if (f.size() != 3 || f[1].empty()) {
        throw ParseError(line_no, "expected suffix|string|Tag");
      }
      rules.suffix_rules.emplace_back(to_lower(f[1]),
                                      parse_pos_field(f[2], line_no));
    } else if (f[0] == "default") {
      if (f.size() != 2) throw ParseError(line_no, "expected default|Tag");
      if (have_default) throw ParseError(line_no, "duplicate default tag");
      rules.default_tag = parse_pos_field(f[1], line_no);
      have_default = true;
    } else {
      throw ParseError(line_no, "expected a word, suffix or default line");
    }
  }
  return rules;
}

KnowledgeBase load_kb_dir(const std::filesystem::path& dir) {
  auto open = [&](const char* name) {
    std::ifstream in(dir / name);
    if (!in) {
      throw std::runtime_error("cannot open " + (dir / name).string());
    }
    return in;
  };

  auto loaded = [&](const char* name, auto loader) {
    auto in = open(name);
    try {
      return loader(in);
    } catch (const ParseError& e) {
      throw ParseError(e.line(), std::string(name) + ": " + e.message());
    }
  };

  KnowledgeBase kb;
  kb.lexicon = loaded("lexicon.kb", [](std::istream& in) { return load_lexicon(in); });
  kb.context = loaded("context.kb", [&](std::istream& in) {
    return load_context_knowledge(in, kb.lexicon);
  });
  kb.ontology = loaded("ontology.kb", [](std::istream& in) { return load_ontology(in); });
  kb.tagger = loaded("tagger.kb", [](std::istream& in) { return load_tagger_rules(in); });
  return kb;
}

ValidationReport validate_kb(const Lexicon& lexicon,
                             const ContextKnowledge& context,
                             const Ontology& ontology) {
  ValidationReport report;
  auto error = [&](std::string code, std::string message) {
    report.errors.push_back({std::move(code), std::move(message)});
  };
  auto warn = [&](std::string code, std::string message) {
    report.warnings.push_back({std::move(code), std::move(message)});
  };
  auto word_ref = [](const ContextRecord& r) {
    std::ostringstream os;
    os << r.lemma << "/" << tag_name(r.pos) << "#" << r.sense_id;
    return os.str();
  };

  for (const auto& r : context.records) {
    const LexicalEntry* entry = lexicon.find(r.lemma, r.pos);
    bool known = false;
    if (entry) {
      for (const auto& s : entry->senses) known |= s.id == r.sense_id;
    }
    if (!known) {
      error("dangling-sense",
            "context record " + word_ref(r) + " has no lexicon sense");
    }
    if (r.concept_anchor && !ontology.has_node(*r.concept_anchor)) {
      error("dangling-anchor", "context record " + word_ref(r) + " anchor '@" +
                                   *r.concept_anchor +
                                   "' is not an ontology node");
    }
  }

  for (const auto& [key, entry] : lexicon.entries) {
    if (entry.ambiguous()) {
      auto records = context.records_for(entry.lemma, entry.pos);
      if (records.empty()) {
        error("uncovered-ambiguous",
              "ambiguous entry '" + entry.lemma + "/" +
                  std::string(tag_name(entry.pos)) +
                  "' has no context records");
      }
      for (const auto& s : entry.senses) {
        const ContextRecord* r = context.find(entry.lemma, entry.pos, s.id);
        if (!r || !r->concept_anchor) {
          std::ostringstream os;
          os << "sense " << entry.lemma << "/" << tag_name(entry.pos) << "#"
             << s.id << " has no concept anchor; the ontology cannot confirm it";
          warn("unconfirmable-sense", os.str());
        }
      }
    }
    for (const auto& s : entry.senses) {
      for (const auto& syn : s.synonyms) {
        bool present = false;
        for (PosTag pos : {PosTag::Noun, PosTag::Verb, PosTag::Adjective,
                           PosTag::Adverb}) {
          present |= lexicon.find(syn, pos) != nullptr;
        }
        if (!present) {
          std::ostringstream os;
          os << "synonym '" << syn << "' of " << entry.lemma << "/"
             << tag_name(entry.pos) << "#" << s.id << " is not in the lexicon";
          warn("unknown-synonym", os.str());
        }
      }
    }
  }

  for (const auto& e : ontology.edges) {
    for (const auto& end : {e.source, e.target}) {
      if (!ontology.has_node(end)) {
        error("undeclared-node",
              "edge " + e.source + " -" + e.relation + "-> " + e.target +
                  " references undeclared node '" + end + "'");
      }
    }
  }

  return report;
}

std::vector<Sense> lookup_senses(const Lexicon& lexicon,
                                 std::string_view lemma, PosTag pos) {
  const LexicalEntry* entry = lexicon.find(lemma, pos);
  if (!entry) return {};
  return entry->senses;
}

std::string lemmatize(const Lexicon& lexicon, std::string_view surface,
                      PosTag pos) {
  std::string s = to_lower(surface);
  if (lexicon.find(s, pos)) return s;

  for (const auto& [key, entry] : lexicon.entries) {
    if (key.second == pos && entry.inflections.count(s)) return entry.lemma;
  }

  struct Strip {
    std::string_view suffix;
    std::string_view replacement;
  };
  static constexpr Strip kStrips[] = {
      {"ies", "y"}, {"es", ""},  {"s", ""},
      {"ing", ""},  {"ing", "e"}, {"ed", ""}, {"ed", "e"},
  };
  for (const auto& strip : kStrips) {
    if (s.size() > strip.suffix.size() &&
        s.ends_with(strip.suffix)) {
      std::string candidate = s.substr(0, s.size() - strip.suffix.size());
      candidate += strip.replacement;
      if (lexicon.find(candidate, pos)) return candidate;
    }
  }
  return s;
}

}  // namespace lexiq
