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

// Brute-force reference for sense mapping: recomputes support straight from
// the definitions, sharing no code with map_sense, so the two can be checked
// against each other over randomized inputs. Desk-scale only.

#ifndef LEXIQ_ORACLE_HPP_
#define LEXIQ_ORACLE_HPP_

#include <string_view>
#include <vector>

#include "lexiq/graph.hpp"
#include "lexiq/kb.hpp"

namespace lexiq {

// Must produce exactly map_sense's result. Guards its exhaustive search by
// scale: throws std::invalid_argument when |candidates| > 8 or
// |onto.nodes| > 12.
MappingResult enumerate_oracle(const Ontology& onto, const Lexicon& lexicon,
                               const ContextKnowledge& ctx,
                               const QuestionGraph& qgraph,
                               std::string_view ambiguous_lemma,
                               const std::vector<SenseCandidate>& candidates);

}  // namespace lexiq

#endif  // LEXIQ_ORACLE_HPP_
