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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace setcoh {

namespace {

using nlohmann::json;

Complex parse_entry(const json& entry) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
    throw ParseError("matrix entries must be [re, im] pairs of numbers");
  }
  const double re = entry[0].get<double>();
  const double im = entry[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw ParseError("matrix entries must be finite");
  }
  return Complex(re, im);
}

ComplexMatrix parse_matrix(const json& rows, int dim) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    throw ParseError("state matrix must have exactly " + std::to_string(dim) + " rows");
  }
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ParseError("state matrix row " + std::to_string(i) + " must have " +
                       std::to_string(dim) + " entries");
    }
    for (int j = 0; j < dim; ++j) {
      m(i, j) = parse_entry(row[static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

}  // namespace

StateFamily parse_family_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("states")) {
    throw ParseError("family document needs \"dimension\" and \"states\" fields");
  }
  if (!doc["dimension"].is_number_integer() || doc["dimension"].get<int>() < 1) {
    throw ParseError("\"dimension\" must be a positive integer");
  }
  const int dim = doc["dimension"].get<int>();
  const json& states = doc["states"];
  if (!states.is_array() || states.empty()) {
    throw ParseError("\"states\" must be a nonempty array");
  }
  std::vector<DensityMatrix> parsed;
  parsed.reserve(states.size());
  for (const json& state : states) {
    if (!state.is_object() || !state.contains("matrix")) {
      throw ParseError("each state needs a \"matrix\" field");
    }
    parsed.emplace_back(parse_matrix(state["matrix"], dim));
  }
  return StateFamily(std::move(parsed));
}

StateFamily load_family(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_family_json(buffer.str());
}

std::string family_to_json(const StateFamily& fam, int indent) {
  json doc;
  doc["dimension"] = fam.dim();
  json states = json::array();
  for (const DensityMatrix& rho : fam) {
    json rows = json::array();
    for (int i = 0; i < fam.dim(); ++i) {
      json row = json::array();
      for (int j = 0; j < fam.dim(); ++j) {
        const Complex v = rho.matrix()(i, j);
        row.push_back(json::array({v.real(), v.imag()}));
      }
      rows.push_back(std::move(row));
    }
    states.push_back(json{{"matrix", std::move(rows)}});
  }
  doc["states"] = std::move(states);
  return doc.dump(indent) + "\n";
}

void save_family(const StateFamily& fam, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << family_to_json(fam);
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace setcoh
