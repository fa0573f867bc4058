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

#include "lexiq/cli.hpp"

#include <atomic>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "lexiq/text.hpp"

namespace lexiq::cli {

namespace {

// Tag spelling for the human-readable bracket line; Prep renders as the
// conventional "IN".
std::string_view display_tag(PosTag tag) {
  return tag == PosTag::Prep ? std::string_view("IN") : tag_name(tag);
}

std::string brace_list(const std::vector<int>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(ids[i]);
  }
  return out + "}";
}

std::string brace_map(const std::map<int, int>& support) {
  std::string out = "{";
  bool first = true;
  for (const auto& [id, count] : support) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(id) + ":" + std::to_string(count);
  }
  return out + "}";
}

std::string format_text(const ResolutionReport& report) {
  std::ostringstream os;
  os << "question: " << report.question << "\n";
  os << "structure: " << structure_name(report.structure) << "\n";
  os << "answer type: " << answer_type_name(report.answer_type) << "\n";

  os << "tags:\n";
  std::string tag_line;
  for (const auto& t : report.tagged) {
    if (t.tag == PosTag::Punct) continue;
    if (!tag_line.empty()) tag_line += ' ';
    tag_line += "[" + t.token.surface + "/" + std::string(display_tag(t.tag)) +
                "]";
  }
  if (!tag_line.empty()) os << tag_line << "\n";

  os << "chunks:\n";
  std::string chunk_line;
  for (const auto& c : report.chunks) {
    if (!chunk_line.empty()) chunk_line += ' ';
    chunk_line += "[" + chunk_text(c, report.tagged) + "/" +
                  std::string(chunk_kind_name(c.kind)) + "]";
  }
  if (!chunk_line.empty()) os << chunk_line << "\n";

  os << "triples:\n";
  for (const auto& t : report.graph.triples) {
    os << "(" << t.subject << ", " << t.relation << ", " << t.object << ")\n";
  }

  os << "words:\n";
  for (const auto& w : report.words) {
    os << w.lemma << "/" << tag_name(w.pos) << ": candidates "
       << brace_list(w.candidates) << " surviving " << brace_list(w.surviving)
       << " chosen " << (w.chosen ? std::to_string(*w.chosen) : "-") << " ["
       << status_name(w.status) << "] support " << brace_map(w.support);
    if (w.context_inconclusive) os << " (context inconclusive)";
    os << "\n";
  }

  os << "resolved chunks:\n";
  std::string resolved_line;
  for (const auto& c : report.resolved_chunks) {
    if (!resolved_line.empty()) resolved_line += ' ';
    resolved_line += "[" + c.text + "/" + std::string(chunk_kind_name(c.kind));
    if (c.sense) resolved_line += ":" + std::to_string(*c.sense);
    resolved_line += "]";
  }
  if (!resolved_line.empty()) os << resolved_line << "\n";
  return os.str();
}

nlohmann::ordered_json report_to_json(const ResolutionReport& report) {
  auto tokens = nlohmann::ordered_json::array();
  auto tags = nlohmann::ordered_json::array();
  for (const auto& t : report.tagged) {
    tokens.push_back(t.token.surface);
    tags.push_back(std::string(tag_name(t.tag)));
  }

  auto chunks = nlohmann::ordered_json::array();
  for (const auto& c : report.resolved_chunks) {
    nlohmann::ordered_json jc;
    jc["kind"] = std::string(chunk_kind_name(c.kind));
    jc["text"] = c.text;
    jc["headword"] = c.headword;
    jc["sense"] = c.sense ? nlohmann::ordered_json(*c.sense)
                          : nlohmann::ordered_json(nullptr);
    chunks.push_back(std::move(jc));
  }

  auto triples = nlohmann::ordered_json::array();
  for (const auto& t : report.graph.triples) {
    triples.push_back({t.subject, t.relation, t.object});
  }

  auto words = nlohmann::ordered_json::array();
  for (const auto& w : report.words) {
    auto support = nlohmann::ordered_json::object();
    for (const auto& [id, count] : w.support) {
      support[std::to_string(id)] = count;
    }
    nlohmann::ordered_json jw;
    jw["lemma"] = w.lemma;
    jw["candidates"] = w.candidates;
    jw["surviving"] = w.surviving;
    jw["chosen"] = w.chosen ? nlohmann::ordered_json(*w.chosen)
                            : nlohmann::ordered_json(nullptr);
    jw["status"] = std::string(status_name(w.status));
    jw["support"] = std::move(support);
    words.push_back(std::move(jw));
  }

  nlohmann::ordered_json j;
  j["question"] = report.question;
  j["tokens"] = std::move(tokens);
  j["tags"] = std::move(tags);
  j["chunks"] = std::move(chunks);
  j["structure"] = std::string(structure_name(report.structure));
  j["answer_type"] = std::string(answer_type_name(report.answer_type));
  j["triples"] = std::move(triples);
  j["words"] = std::move(words);
  return j;
}

void print_findings(const ValidationReport& report, std::ostream& os) {
  for (const auto& f : report.errors) {
    os << "error[" << f.code << "]: " << f.message << "\n";
  }
  for (const auto& f : report.warnings) {
    os << "warning[" << f.code << "]: " << f.message << "\n";
  }
  os << report.errors.size() << " errors, " << report.warnings.size()
     << " warnings\n";
}

// Resolves `questions` across a small thread pool; results land in input
// order regardless of completion order.
std::vector<std::string> resolve_all(const std::vector<std::string>& questions,
                                     const KnowledgeBase& kb,
                                     const ResolveOptions& options,
                                     OutputFormat format) {
  std::vector<std::string> results(questions.size());
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, questions.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < questions.size();
         i = next.fetch_add(1)) {
      results[i] = format_report(resolve_question(questions[i], kb, options),
                                 format);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w + 1 < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return results;
}

int run_command(const CliConfig& config, std::ostream& out,
                std::ostream& err) {
  KnowledgeBase kb;
  try {
    kb = load_kb_dir(config.kb_dir);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  ValidationReport validation =
      validate_kb(kb.lexicon, kb.context, kb.ontology);

  if (config.command == "validate") {
    print_findings(validation, out);
    return validation.ok() ? 0 : 1;
  }
  if (!validation.ok()) {
    print_findings(validation, err);
    return 1;
  }

  ResolveOptions options;
  options.skip_ontology = config.ablation == "context-only";

  if (config.command == "resolve") {
    out << format_report(resolve_question(*config.question, kb, options),
                         config.output_format);
    return 0;
  }

  // batch
  std::ifstream in(*config.input_file);
  if (!in) {
    err << "cannot open " << config.input_file->string() << "\n";
    return 1;
  }
  std::vector<std::string> questions;
  std::string line;
  while (std::getline(in, line)) {
    std::string clean = trim(line);
    if (clean.empty() || clean.front() == '#') continue;
    questions.push_back(clean);
  }

  auto results = resolve_all(questions, kb, options, config.output_format);
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (config.output_format == OutputFormat::Text && i > 0) out << "---\n";
    out << results[i];
  }
  return 0;
}

}  // namespace

std::string format_report(const ResolutionReport& report,
                          OutputFormat format) {
  if (format == OutputFormat::Json) {
    return report_to_json(report).dump() + "\n";
  }
  return format_text(report);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CliConfig config;
  std::string format = "text";

  CLI::App app{"Lexical ambiguity resolver for natural-language questions",
               "lexiq"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--kb", config.kb_dir, "knowledge base directory")
        ->envname("NLQ_KB_DIR")
        ->required();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto add_ablation = [&](CLI::App* sub) {
    sub->add_option("--ablation", config.ablation,
                    "disable the ontology mapping stage with 'context-only'")
        ->check(CLI::IsMember({"full", "context-only"}))
        ->capture_default_str();
  };

  std::string question;
  CLI::App* resolve = app.add_subcommand("resolve", "resolve one question");
  add_common(resolve);
  add_ablation(resolve);
  resolve->add_option("question", question, "the question text")->required();

  std::filesystem::path input_file;
  CLI::App* batch =
      app.add_subcommand("batch", "resolve a file of questions, one per line");
  add_common(batch);
  add_ablation(batch);
  batch->add_option("--input", input_file, "question file")->required();

  CLI::App* validate =
      app.add_subcommand("validate", "check a knowledge base for defects");
  add_common(validate);

  std::vector<const char*> argv{"lexiq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  if (resolve->parsed()) {
    config.command = "resolve";
    config.question = question;
  } else if (batch->parsed()) {
    config.command = "batch";
    config.input_file = input_file;
  } else {
    config.command = "validate";
  }
  config.output_format =
      format == "json" ? OutputFormat::Json : OutputFormat::Text;

  return run_command(config, out, err);
}

}  // namespace lexiq::cli
