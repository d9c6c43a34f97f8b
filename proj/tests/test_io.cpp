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

#include "setcoh/io.hpp"

#include <cstdlib>
#include <filesystem>

#include <doctest.h>

#include "setcoh/counterexamples.hpp"
#include "test_support.hpp"

using namespace setcoh;
using testsupport::max_abs_diff;

TEST_CASE("family JSON round trip is bit exact") {
  const StateFamily original({random_density(3, 41), random_density(3, 43),
                              random_density(3, 47)});
  const StateFamily back = parse_family_json(family_to_json(original));
  REQUIRE(back.size() == original.size());
  CHECK(back.dim() == 3);
  for (std::size_t k = 0; k < original.size(); ++k) {
    CHECK(max_abs_diff(back[k].matrix(), original[k].matrix()) == 0.0);
  }
}

TEST_CASE("file round trip through save_family/load_family") {
  const auto path = std::filesystem::temp_directory_path() / "setcoh-io-test.json";
  const FamilyPair fams = prop_d4_w3();
  save_family(fams.coherent, path);
  const StateFamily back = load_family(path);
  CHECK(max_abs_diff(back[1].matrix(), fams.coherent[1].matrix()) == 0.0);
  std::filesystem::remove(path);
}

TEST_CASE("schema violations raise ParseError") {
  CHECK_THROWS_AS(parse_family_json("not json"), ParseError);
  CHECK_THROWS_AS(parse_family_json("{}"), ParseError);
  CHECK_THROWS_AS(parse_family_json(R"({"dimension": 0, "states": []})"), ParseError);
  CHECK_THROWS_AS(parse_family_json(R"({"dimension": 2, "states": []})"), ParseError);
  CHECK_THROWS_AS(parse_family_json(R"({"dimension": 2, "states": [{"matrix": [[[1,0]]]}]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_family_json(
          R"({"dimension": 1, "states": [{"matrix": [[["x", 0]]]}]})"),
      ParseError);
  CHECK_THROWS_AS(load_family("/nonexistent/family.json"), ParseError);
}

TEST_CASE("well-formed JSON describing a bad state raises StateError") {
  // Valid schema, trace two.
  const char* text = R"({"dimension": 2, "states": [{"matrix": [[[1,0],[0,0]],[[0,0],[1,0]]]}]})";
  CHECK_THROWS_AS(parse_family_json(text), TraceNotOneError);
}

TEST_CASE("format_real survives strtod round trips") {
  for (double v : {0.0, 1.0 / 3.0, 1e-18, 0.03125, -2.7182818284590452, 1e300}) {
    const std::string s = format_real(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}
