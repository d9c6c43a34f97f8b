// Copyright 2026 The setcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "setcoh/states.hpp"

namespace setcoh {

/// Malformed JSON or a document that does not follow the family schema.
/// Distinct from StateError: a well-formed matrix that fails the density
/// checks raises the latter.
class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Family files are JSON of the form
//   {"dimension": d, "states": [{"matrix": [[[re, im], ...], ...]}, ...]}
// with row-major matrices and each entry a [re, im] pair of finite doubles.

StateFamily parse_family_json(const std::string& text);
StateFamily load_family(const std::filesystem::path& path);

std::string family_to_json(const StateFamily& fam, int indent = 2);
void save_family(const StateFamily& fam, const std::filesystem::path& path);

/// Shortest text that parses back to exactly `v` (17 significant digits).
std::string format_real(double v);

}  // namespace setcoh
