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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "setcoh/states.hpp"

namespace setcoh {

/// A word in 1-based state labels, e.g. (1,2,1,2). Words that are cyclic
/// rotations of each other index the same trace invariant; canonical() picks
/// the lexicographically least rotation as the class representative.
class Word {
 public:
  explicit Word(std::vector<int> labels);

  /// Parses either the comma-separated form "1,2,1,2" or, when every label
  /// is a single digit 1..9, the compact form "1212".
  static Word parse(std::string_view text);

  const std::vector<int>& labels() const { return labels_; }
  std::size_t length() const { return labels_.size(); }
  int max_label() const;

  Word canonical() const;
  Word rotated(std::size_t k) const;
  Word reversed() const;

  /// Compact digit form when all labels are <= 9, comma-separated otherwise.
  std::string str() const;

  bool operator==(const Word& other) const = default;

 private:
  std::vector<int> labels_;
};

/// Lexicographically least rotation of w.
Word canonical(const Word& w);

/// A finite set of words with cyclic duplicates removed; evaluating it on a
/// family produces the scenario's invariant tuple.
class Scenario {
 public:
  /// Canonicalizes every word and drops cyclic duplicates, keeping first
  /// occurrence order.
  static Scenario from_words(const std::vector<Word>& words);

  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }

  /// Largest label appearing: the smallest family size the scenario fits.
  int min_family_size() const { return min_family_size_; }

 private:
  Scenario() = default;
  std::vector<Word> words_;
  int min_family_size_ = 0;
};

// The two-state scenarios of orders two, three and four.
Scenario scenario_w2();  // {11, 22, 12}
Scenario scenario_w3();  // {11, 22, 12, 111, 222, 112, 122}
Scenario scenario_w4();  // {1122, 1212}

// Their n-state extensions (n >= 2): all pairwise second-order words, all
// pairwise words of order <= 3, and the pairwise fourth-order pair
// {iijj, ijij} for i < j.
Scenario scenario_w2n(int n);
Scenario scenario_wle3n(int n);
Scenario scenario_w4n(int n);

/// The trace invariant Tr(rho_{i1} rho_{i2} ... rho_{im}) of the word on the
/// family. The word is canonicalized first, so cyclic rotations of the same
/// word evaluate through an identical multiplication order and return
/// bit-identical values. Labels must not exceed the family size.
Complex delta(const Word& w, const StateFamily& fam);

/// Evaluated scenario data keyed by canonical word, iterable in scenario
/// order.
class InvariantTuple {
 public:
  explicit InvariantTuple(std::vector<std::pair<Word, Complex>> entries)
      : entries_(std::move(entries)) {}

  const std::vector<std::pair<Word, Complex>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Value of the word's cyclic class; throws if the scenario lacks it.
  Complex value(const Word& w) const;

  /// Real part of value(w); throws std::logic_error if |imag| > 1e-10.
  /// Every two-state word handled here is real-valued by Hermiticity and
  /// cyclicity; general multi-state words may legitimately be complex and
  /// must be read through value().
  double real_value(const Word& w) const;

 private:
  std::vector<std::pair<Word, Complex>> entries_;
};

/// Applies delta to every word of the scenario.
InvariantTuple evaluate(const Scenario& sc, const StateFamily& fam);

}  // namespace setcoh
