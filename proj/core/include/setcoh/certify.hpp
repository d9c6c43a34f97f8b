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

#include <optional>
#include <utility>
#include <vector>

#include "setcoh/states.hpp"

namespace setcoh {

/// Default cutoff on the pairwise gap below which a pair counts as commuting.
/// The gap equals half the squared Hilbert-Schmidt norm of the commutator, so
/// this matches a commutator-norm cutoff of ~1e-9; the two defaults must move
/// together or the gap test and the commutator oracle drift apart.
inline constexpr double kDefaultGapThreshold = 1e-18;

/// Default commutator-norm cutoff for the independent oracle.
inline constexpr double kDefaultCommutatorTol = 1e-9;

/// The fourth-order pairwise gap Tr(rho^2 sigma^2) - Tr(rho sigma rho sigma).
/// Always computed from the two trace words (the invariant route), never from
/// the commutator. The two words nearly cancel on almost-commuting pairs, so
/// they are accumulated in compensated double-double arithmetic; the result
/// is accurate to well below kDefaultGapThreshold. Nonnegative up to 1e-12.
double gamma(const DensityMatrix& rho, const DensityMatrix& sigma);

/// The same gap through its spectral form: eigendecompose rho, express sigma
/// in that eigenbasis, and sum (lambda_i - lambda_j)^2 |sigma_ij|^2 over
/// i < j. An independent second route, used for cross-checks against gamma
/// and never substituted for it.
double gamma_spectral(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Sum of gamma over all unordered pairs, in fixed index order (bit-stable).
/// Zero for a single-state family; zero exactly when the family is set
/// incoherent.
double total_gap(const StateFamily& fam);

struct PairGap {
  int i = 0;  // 1-based labels, i < j
  int j = 0;
  double gap = 0.0;
};

/// Decision plus certificate. Raw gap values are always reported so callers
/// can apply their own thresholds; witness_pair is the maximal-gap pair and
/// is present exactly when the family is set coherent.
struct CoherenceVerdict {
  bool incoherent = true;
  double total_gap = 0.0;
  double threshold = 0.0;
  std::vector<PairGap> pair_gaps;
  std::optional<std::pair<int, int>> witness_pair;
};

/// Set incoherent iff every pairwise gap is <= threshold.
CoherenceVerdict decide_set_coherence(const StateFamily& fam,
                                      double threshold = kDefaultGapThreshold);

/// Independent check: true iff max over pairs of ||[rho_i, rho_j]||_2 <= tol.
bool commutator_oracle(const StateFamily& fam, double tol = kDefaultCommutatorTol);

}  // namespace setcoh
