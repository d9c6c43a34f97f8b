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

#include <cmath>

#include <doctest.h>

#include "setcoh/states.hpp"
#include "test_support.hpp"

using namespace setcoh;

namespace {

StateFamily qutrit_commuting_pair() {
  ComplexMatrix rho = ComplexMatrix::Zero(3, 3);
  rho(0, 0) = 0.5;
  rho(1, 1) = 0.5;
  ComplexMatrix sigma = ComplexMatrix::Zero(3, 3);
  sigma(0, 0) = 0.5;
  sigma(2, 2) = 0.5;
  return StateFamily({DensityMatrix(rho), DensityMatrix(sigma)});
}

StateFamily d4_pair(bool rotated) {
  ComplexMatrix sigma0 = ComplexMatrix::Zero(4, 4);
  sigma0(0, 0) = 0.5;
  sigma0(2, 2) = 0.5;
  return StateFamily({DensityMatrix(testsupport::d4_rho()),
                      DensityMatrix(rotated ? testsupport::d4_sigma1() : sigma0)});
}

}  // namespace

TEST_CASE("word validation and parsing") {
  CHECK_THROWS_AS(Word(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(Word(std::vector<int>{0}), std::invalid_argument);

  CHECK(Word::parse("1212").labels() == std::vector<int>{1, 2, 1, 2});
  CHECK(Word::parse("1,2,1,2").labels() == std::vector<int>{1, 2, 1, 2});
  CHECK(Word::parse("10,2").labels() == std::vector<int>{10, 2});
  CHECK_THROWS_AS(Word::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("1a2"), std::invalid_argument);
}

TEST_CASE("word text form") {
  CHECK(Word::parse("1212").str() == "1212");
  CHECK(Word(std::vector<int>{1, 12}).str() == "1,12");
}

TEST_CASE("canonical rotation") {
  CHECK(canonical(Word::parse("212")) == Word::parse("122"));
  CHECK(canonical(Word::parse("1122")) == canonical(Word::parse("2211")));
  CHECK(canonical(Word::parse("1212")) == Word::parse("1212"));
}

TEST_CASE("scenario builders produce the advertised word sets") {
  const Scenario w4 = scenario_w4();
  REQUIRE(w4.size() == 2);
  CHECK(w4.words()[0] == Word::parse("1122"));
  CHECK(w4.words()[1] == Word::parse("1212"));

  CHECK(scenario_w2().size() == 3);
  CHECK(scenario_w3().size() == 7);
  CHECK(scenario_w2n(2).size() == 3);
  CHECK(scenario_w4n(3).size() == 6);

  // For two states the pairwise order-<=3 set is exactly the third-order
  // scenario; for three it holds 6 single-state plus 9 mixed words.
  CHECK(scenario_wle3n(2).size() == 7);
  CHECK(scenario_wle3n(3).size() == 15);

  CHECK(scenario_w2n(2).min_family_size() == 2);
  CHECK(scenario_w4n(5).min_family_size() == 5);

  CHECK_THROWS_AS(scenario_w2n(1), std::invalid_argument);
  CHECK_THROWS_AS(scenario_wle3n(0), std::invalid_argument);
  CHECK_THROWS_AS(scenario_w4n(1), std::invalid_argument);
}

TEST_CASE("delta on the explicit pairs") {
  CHECK(delta(Word::parse("12"), qutrit_commuting_pair()).real() == 0.25);

  const StateFamily rotated = d4_pair(true);
  CHECK(delta(Word::parse("1122"), rotated).real() == doctest::Approx(1.0 / 16).epsilon(1e-15));
  CHECK(delta(Word::parse("1212"), rotated).real() == doctest::Approx(1.0 / 32).epsilon(1e-15));

  CHECK_THROWS_AS(delta(Word::parse("13"), rotated), std::invalid_argument);
}

TEST_CASE("evaluate the second-order scenario") {
  const InvariantTuple t = evaluate(scenario_w2(), qutrit_commuting_pair());
  CHECK(t.real_value(Word::parse("11")) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(t.real_value(Word::parse("22")) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(t.real_value(Word::parse("12")) == doctest::Approx(0.25).epsilon(1e-12));

  // A pure state against itself pins every word at one.
  ComplexMatrix pure = ComplexMatrix::Zero(3, 3);
  pure(0, 0) = 1.0;
  const StateFamily twice(std::vector<DensityMatrix>{DensityMatrix(pure), DensityMatrix(pure)});
  const InvariantTuple p = evaluate(scenario_w2(), twice);
  for (const auto& [word, value] : p.entries()) {
    CHECK(value.real() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("both d=4 pairs share the full order-<=3 tuple") {
  const InvariantTuple a = evaluate(scenario_w3(), d4_pair(false));
  const InvariantTuple b = evaluate(scenario_w3(), d4_pair(true));
  const double expected[] = {0.5, 0.5, 0.25, 0.25, 0.25, 0.125, 0.125};
  for (std::size_t k = 0; k < 7; ++k) {
    CHECK(std::abs(a.entries()[k].second - expected[k]) < 1e-12);
    CHECK(std::abs(b.entries()[k].second - expected[k]) < 1e-12);
  }
}

TEST_CASE("delta is exactly rotation invariant") {
  std::mt19937_64 rng(83);
  const StateFamily fam({random_density(4, rng()), random_density(4, rng()),
                         random_density(4, rng())});
  for (const char* text : {"123", "1213", "1122", "321", "2231"}) {
    const Word w = Word::parse(text);
    const Complex base = delta(w, fam);
    for (std::size_t k = 1; k < w.length(); ++k) {
      CHECK(delta(w.rotated(k), fam) == base);  // bitwise, via canonicalization
    }
  }
}

TEST_CASE("reversal conjugates the invariant") {
  std::mt19937_64 rng(89);
  const StateFamily fam({random_density(3, rng()), random_density(3, rng()),
                         random_density(3, rng())});
  for (const char* text : {"123", "1213", "12", "1223"}) {
    const Word w = Word::parse(text);
    const Complex fwd = delta(w, fam);
    const Complex bwd = delta(w.reversed(), fam);
    CHECK(std::abs(bwd - std::conj(fwd)) < 1e-12);
  }
}

TEST_CASE("single-label words are normalized") {
  std::mt19937_64 rng(97);
  for (int d = 1; d <= 6; ++d) {
    const StateFamily fam({random_density(d, rng())});
    CHECK(std::abs(delta(Word::parse("1"), fam) - Complex(1.0, 0.0)) < 1e-10);
  }
}

TEST_CASE("zero-block padding preserves every word") {
  std::mt19937_64 rng(101);
  const StateFamily fam({random_density(3, rng()), random_density(3, rng())});
  std::vector<DensityMatrix> padded;
  for (const DensityMatrix& rho : fam) padded.push_back(pad_embed(rho, 6));
  const StateFamily big(std::move(padded));
  for (const char* text : {"11", "12", "112", "1122", "1212", "122"}) {
    const Word w = Word::parse(text);
    CHECK(std::abs(delta(w, fam) - delta(w, big)) < 1e-12);
  }
}

TEST_CASE("real_value guards genuinely complex invariants") {
  // Pure states |0>, |+>, |+i>: Tr(P0 P+ P+i) = 1/4 + i/4.
  const DensityMatrix p0 = from_bloch({0, 0, 1});
  const DensityMatrix pplus = from_bloch({1, 0, 0});
  const DensityMatrix pi = from_bloch({0, 1, 0});
  const StateFamily fam({p0, pplus, pi});
  const Scenario sc = Scenario::from_words({Word::parse("123")});
  const InvariantTuple t = evaluate(sc, fam);
  CHECK(t.value(Word::parse("123")).imag() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK_THROWS_AS(t.real_value(Word::parse("123")), std::logic_error);
  CHECK_THROWS_AS(t.value(Word::parse("12")), std::invalid_argument);
}
