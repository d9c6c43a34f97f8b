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

#include "setcoh/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace setcoh {

Word::Word(std::vector<int> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw std::invalid_argument("Word: at least one label required");
  }
  for (int l : labels_) {
    if (l < 1) {
      throw std::invalid_argument("Word: labels are 1-based, got " + std::to_string(l));
    }
  }
}

Word Word::parse(std::string_view text) {
  std::vector<int> labels;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t next = text.find(',', pos);
      const std::string_view tok =
          text.substr(pos, next == std::string_view::npos ? next : next - pos);
      if (tok.empty()) {
        throw std::invalid_argument("Word::parse: empty label in \"" + std::string(text) + "\"");
      }
      int value = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') {
          throw std::invalid_argument("Word::parse: invalid label \"" + std::string(tok) + "\"");
        }
        value = value * 10 + (c - '0');
      }
      labels.push_back(value);
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("Word::parse: compact form accepts digits 1-9, got \"" +
                                    std::string(text) + "\"");
      }
      labels.push_back(c - '0');
    }
  }
  return Word(std::move(labels));
}

int Word::max_label() const { return *std::max_element(labels_.begin(), labels_.end()); }

Word Word::rotated(std::size_t k) const {
  const std::size_t m = labels_.size();
  std::vector<int> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    out[i] = labels_[(i + k) % m];
  }
  return Word(std::move(out));
}

Word Word::canonical() const {
  const std::size_t m = labels_.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      const int lhs = labels_[(k + i) % m];
      const int rhs = labels_[(best + i) % m];
      if (lhs != rhs) {
        if (lhs < rhs) best = k;
        break;
      }
    }
  }
  return rotated(best);
}

Word Word::reversed() const {
  std::vector<int> out(labels_.rbegin(), labels_.rend());
  return Word(std::move(out));
}

std::string Word::str() const {
  if (max_label() <= 9) {
    std::string s;
    s.reserve(labels_.size());
    for (int l : labels_) s.push_back(static_cast<char>('0' + l));
    return s;
  }
  std::string s;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(labels_[i]);
  }
  return s;
}

Word canonical(const Word& w) { return w.canonical(); }

Scenario Scenario::from_words(const std::vector<Word>& words) {
  Scenario sc;
  std::set<std::vector<int>> seen;
  for (const Word& w : words) {
    Word c = w.canonical();
    if (seen.insert(c.labels()).second) {
      sc.min_family_size_ = std::max(sc.min_family_size_, c.max_label());
      sc.words_.push_back(std::move(c));
    }
  }
  return sc;
}

namespace {

Word make_word(std::initializer_list<int> labels) { return Word(std::vector<int>(labels)); }

void require_n(int n, const char* who) {
  if (n < 2) {
    throw std::invalid_argument(std::string(who) + ": n must be >= 2");
  }
}

}  // namespace

Scenario scenario_w2() {
  return Scenario::from_words({make_word({1, 1}), make_word({2, 2}), make_word({1, 2})});
}

Scenario scenario_w3() {
  return Scenario::from_words({make_word({1, 1}), make_word({2, 2}), make_word({1, 2}),
                               make_word({1, 1, 1}), make_word({2, 2, 2}), make_word({1, 1, 2}),
                               make_word({1, 2, 2})});
}

Scenario scenario_w4() {
  return Scenario::from_words({make_word({1, 1, 2, 2}), make_word({1, 2, 1, 2})});
}

Scenario scenario_w2n(int n) {
  require_n(n, "scenario_w2n");
  std::vector<Word> words;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      words.push_back(make_word({i, j}));
    }
  }
  return Scenario::from_words(words);
}

Scenario scenario_wle3n(int n) {
  require_n(n, "scenario_wle3n");
  std::vector<Word> words;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      words.push_back(make_word({i, i}));
      words.push_back(make_word({j, j}));
      words.push_back(make_word({i, j}));
      words.push_back(make_word({i, i, i}));
      words.push_back(make_word({j, j, j}));
      words.push_back(make_word({i, i, j}));
      words.push_back(make_word({i, j, j}));
    }
  }
  return Scenario::from_words(words);
}

Scenario scenario_w4n(int n) {
  require_n(n, "scenario_w4n");
  std::vector<Word> words;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      words.push_back(make_word({i, i, j, j}));
      words.push_back(make_word({i, j, i, j}));
    }
  }
  return Scenario::from_words(words);
}

Complex delta(const Word& w, const StateFamily& fam) {
  const Word c = w.canonical();
  if (c.max_label() > static_cast<int>(fam.size())) {
    throw std::invalid_argument("delta: word label " + std::to_string(c.max_label()) +
                                " exceeds family size " + std::to_string(fam.size()));
  }
  const auto& labels = c.labels();
  ComplexMatrix product = fam[static_cast<std::size_t>(labels[0] - 1)].matrix();
  for (std::size_t i = 1; i < labels.size(); ++i) {
    product = matmul(product, fam[static_cast<std::size_t>(labels[i] - 1)].matrix());
  }
  return trace(product);
}

Complex InvariantTuple::value(const Word& w) const {
  const Word c = w.canonical();
  for (const auto& [word, val] : entries_) {
    if (word == c) return val;
  }
  throw std::invalid_argument("InvariantTuple: word " + c.str() + " not present");
}

double InvariantTuple::real_value(const Word& w) const {
  const Complex v = value(w);
  if (std::abs(v.imag()) > 1e-10) {
    throw std::logic_error("InvariantTuple: word " + w.canonical().str() +
                           " has non-negligible imaginary part " + std::to_string(v.imag()));
  }
  return v.real();
}

InvariantTuple evaluate(const Scenario& sc, const StateFamily& fam) {
  std::vector<std::pair<Word, Complex>> entries;
  entries.reserve(sc.size());
  for (const Word& w : sc.words()) {
    entries.emplace_back(w, delta(w, fam));
  }
  return InvariantTuple(std::move(entries));
}

}  // namespace setcoh
