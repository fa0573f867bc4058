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

#include <benchmark/benchmark.h>

#include "lexiq/wsd.hpp"

namespace {

const lexiq::KnowledgeBase& fixture_kb() {
  static const lexiq::KnowledgeBase kb = lexiq::load_kb_dir(LEXIQ_FIXTURE_DIR);
  return kb;
}

constexpr const char* kAmbiguousQuestion =
    "How can student deposit money into the bank?";

void BM_LoadKb(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(lexiq::load_kb_dir(LEXIQ_FIXTURE_DIR));
  }
}
BENCHMARK(BM_LoadKb);

void BM_TagAndChunk(benchmark::State& state) {
  const auto& kb = fixture_kb();
  for (auto _ : state) {
    auto tagged =
        lexiq::tag(lexiq::tokenize(kAmbiguousQuestion), kb.tagger, kb.lexicon);
    benchmark::DoNotOptimize(lexiq::chunk(tagged));
  }
}
BENCHMARK(BM_TagAndChunk);

void BM_ResolveQuestion(benchmark::State& state) {
  const auto& kb = fixture_kb();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lexiq::resolve_question(kAmbiguousQuestion, kb));
  }
}
BENCHMARK(BM_ResolveQuestion);

void BM_ResolveUnambiguous(benchmark::State& state) {
  const auto& kb = fixture_kb();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lexiq::resolve_question("Who is the chair of the department?", kb));
  }
}
BENCHMARK(BM_ResolveUnambiguous);

}  // namespace

BENCHMARK_MAIN();
