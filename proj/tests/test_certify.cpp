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

#include "setcoh/certify.hpp"

#include <cmath>

#include <doctest.h>

#include "setcoh/counterexamples.hpp"
#include "test_support.hpp"

using namespace setcoh;

namespace {

// Independent oracle for the gap: half the squared Hilbert-Schmidt norm of
// the commutator, computed entrywise with plain Eigen expressions.
double commutator_gap_oracle(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const ComplexMatrix c = rho.matrix() * sigma.matrix() - sigma.matrix() * rho.matrix();
  return 0.5 * c.squaredNorm();
}

}  // namespace

TEST_CASE("gamma vanishes on a state against itself") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const DensityMatrix rho = random_density(5, seed);
    CHECK(std::abs(gamma(rho, rho)) < 1e-12);
  }
}

TEST_CASE("gamma on the explicit d=4 pairs") {
  const FamilyPair fams = prop_d4_w3();
  CHECK(gamma(fams.incoherent[0], fams.incoherent[1]) == 0.0);
  CHECK(gamma(fams.coherent[0], fams.coherent[1]) == doctest::Approx(1.0 / 32).epsilon(1e-15));

  CHECK_THROWS_AS(gamma(fams.coherent[0], random_density(3, 1)), std::invalid_argument);
}

TEST_CASE("gamma_spectral matches on the explicit pairs") {
  const FamilyPair fams = prop_d4_w3();
  CHECK(std::abs(gamma_spectral(fams.incoherent[0], fams.incoherent[1])) < 1e-12);
  CHECK(gamma_spectral(fams.coherent[0], fams.coherent[1]) ==
        doctest::Approx(1.0 / 32).epsilon(1e-12));
}

TEST_CASE("the two gap routes agree on random pairs") {
  std::mt19937_64 rng(103);
  double max_dev = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 7);
    const DensityMatrix rho = random_density(d, rng());
    const DensityMatrix sigma = random_density(d, rng());
    max_dev = std::max(max_dev, std::abs(gamma(rho, sigma) - gamma_spectral(rho, sigma)));
  }
  CHECK(max_dev < 1e-10);
}

TEST_CASE("gamma equals half the squared commutator norm") {
  std::mt19937_64 rng(107);
  for (int d = 2; d <= 8; ++d) {
    for (int trial = 0; trial < 50; ++trial) {
      const DensityMatrix rho = random_density(d, rng());
      const DensityMatrix sigma = random_density(d, rng());
      CHECK(std::abs(gamma(rho, sigma) - commutator_gap_oracle(rho, sigma)) < 1e-10);
    }
  }
}

TEST_CASE("gamma is symmetric and nonnegative") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 5);
    const DensityMatrix rho = random_density(d, rng());
    const DensityMatrix sigma = random_density(d, rng());
    const double g = gamma(rho, sigma);
    CHECK(g >= -1e-12);
    CHECK(std::abs(g - gamma(sigma, rho)) < 1e-12);
  }
}

TEST_CASE("depolarization scales the gap by (1-p)^2 (1-q)^2") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const DensityMatrix rho = random_density(d, rng());
    const DensityMatrix sigma = random_density(d, rng());
    const double base = gamma(rho, sigma);
    for (double p : {0.0, 0.3, 1.0}) {
      for (double q : {0.15, 0.75}) {
        const double scaled = gamma(depolarize(rho, p), depolarize(sigma, q));
        const double predicted = (1 - p) * (1 - p) * (1 - q) * (1 - q) * base;
        CHECK(std::abs(scaled - predicted) < 1e-10);
      }
    }
  }
}

TEST_CASE("total_gap") {
  CHECK(total_gap(StateFamily({random_density(4, 17)})) == 0.0);

  // Commuting perturbative family: zero. Noncommuting one with directions
  // (1,0) and (0,1): the only pair contributes eps^4 * ||[A,B]||^2 / 2 with
  // ||[A,B]||^2 = 1/2 from the explicit matrices, so eps^4 / 4.
  GeneratorSpec spec{FamilyKind::QutritW2, {{1.0, 0.0}, {0.0, 1.0}}, 0.05};
  const FamilyPair fams = appendix_qutrit_family(spec);
  CHECK(std::abs(total_gap(fams.incoherent)) < 1e-18);
  CHECK(std::abs(total_gap(fams.coherent) - std::pow(0.05, 4) / 4.0) < 1e-18);
}

TEST_CASE("decide_set_coherence on the qutrit pairs") {
  const FamilyPair fams = prop_qutrit_w2();

  const CoherenceVerdict commuting = decide_set_coherence(fams.incoherent);
  CHECK(commuting.incoherent);
  CHECK_FALSE(commuting.witness_pair.has_value());
  CHECK(commuting.threshold == kDefaultGapThreshold);
  REQUIRE(commuting.pair_gaps.size() == 1);
  CHECK(std::abs(commuting.pair_gaps[0].gap) < 1e-18);

  const CoherenceVerdict coherent = decide_set_coherence(fams.coherent);
  CHECK_FALSE(coherent.incoherent);
  REQUIRE(coherent.witness_pair.has_value());
  CHECK(*coherent.witness_pair == std::pair<int, int>{1, 2});
  CHECK(coherent.total_gap == doctest::Approx(1.0 / 64).epsilon(1e-15));
}

TEST_CASE("decide_set_coherence flags the perturbative d=4 family") {
  const FamilyPair fams = appendix_d4_family(default_generator_spec(FamilyKind::D4Order3, 3));
  CHECK(decide_set_coherence(fams.incoherent).incoherent);
  CHECK_FALSE(decide_set_coherence(fams.coherent).incoherent);
}

TEST_CASE("commutator_oracle") {
  CHECK(commutator_oracle(random_commuting_family(5, 4, 21)));

  const FamilyPair fams = prop_d4_w3();
  CHECK(commutator_oracle(fams.incoherent));
  CHECK_FALSE(commutator_oracle(fams.coherent));

  // Padding preserves commutators.
  std::vector<DensityMatrix> padded;
  for (const DensityMatrix& rho : random_commuting_family(3, 3, 23)) {
    padded.push_back(pad_embed(rho, 6));
  }
  CHECK(commutator_oracle(StateFamily(std::move(padded))));
}

TEST_CASE("gap decision and commutator oracle agree at default tolerances") {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 4);

    // Fully commuting family.
    const StateFamily commuting = random_commuting_family(d, 3, rng());
    CHECK(decide_set_coherence(commuting).incoherent == commutator_oracle(commuting));

    // Same family with one generic intruder.
    std::vector<DensityMatrix> mixed(commuting.begin(), commuting.end());
    mixed.push_back(random_density(d, rng()));
    const StateFamily spoiled(std::move(mixed));
    CHECK(decide_set_coherence(spoiled).incoherent == commutator_oracle(spoiled));
    CHECK_FALSE(decide_set_coherence(spoiled).incoherent);
  }
}
