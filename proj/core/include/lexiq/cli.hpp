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

// Command-line front end. Commands: resolve (one question), batch (a file
// of questions, resolved concurrently, emitted in input order), validate
// (knowledge-base lint). Exit codes: 0 success, 1 knowledge-base problems,
// 2 usage errors.

#ifndef LEXIQ_CLI_HPP_
#define LEXIQ_CLI_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lexiq/wsd.hpp"

namespace lexiq::cli {

enum class OutputFormat { Text, Json };

struct CliConfig {
  std::filesystem::path kb_dir;
  std::string command;  // resolve | batch | validate
  std::optional<std::string> question;
  std::optional<std::filesystem::path> input_file;
  OutputFormat output_format = OutputFormat::Text;
  std::string ablation = "full";  // full | context-only
};

// Text mode renders the report section by section, tags as [surface/Tag]
// bracket lines (Prep shown as "IN", punctuation omitted) and chunks as
// [span/Kind]. Json mode emits one object with fixed key order: question,
// tokens, tags, chunks, structure, answer_type, triples, words.
std::string format_report(const ResolutionReport& report, OutputFormat format);

// Entry point behind main(): args excludes the program name. Output goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lexiq::cli

#endif  // LEXIQ_CLI_HPP_
