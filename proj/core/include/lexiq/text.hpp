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

#ifndef LEXIQ_TEXT_HPP
#define LEXIQ_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace lexiq {

// ASCII-only case folding; KB files and questions in scope are ASCII-keyed.
std::string to_lower(std::string_view s);

bool iequals(std::string_view a, std::string_view b);

// Strips leading/trailing spaces, tabs and carriage returns.
std::string trim(std::string_view s);

// Splits on a single separator; fields are not trimmed.
std::vector<std::string> split(std::string_view s, char sep);

}  // namespace lexiq

#endif  // LEXIQ_TEXT_HPP
