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

#include <array>
#include <vector>

#include "setcoh/states.hpp"

namespace setcoh {

/// Which separating construction a generator spec drives: the qutrit family
/// pair with identical pairwise second-order data, or the d=4 family pair
/// with identical pairwise order-<=3 data.
enum class FamilyKind { QutritW2, D4Order3 };

using RVector = std::array<double, 2>;  // (a_k, b_k)

struct GeneratorSpec {
  FamilyKind kind = FamilyKind::QutritW2;
  std::vector<RVector> r_vectors;
  double epsilon = 0.0;
};

/// A set-incoherent family and a set-coherent family that the designated
/// scenario cannot tell apart.
struct FamilyPair {
  StateFamily incoherent;
  StateFamily coherent;
};

/// Default direction vectors: (1,0),(0,1) for n = 2, the n-th roots of unity
/// in the plane otherwise. Never all collinear for n >= 2.
std::vector<RVector> default_r_vectors(int n);

/// default_r_vectors(n) with epsilon = epsilon_max / 2.
GeneratorSpec default_generator_spec(FamilyKind kind, int n);

/// Largest epsilon keeping every generated matrix positive semidefinite,
/// with a 10% safety margin: 0.9 times the minimum over members and both
/// direction bases of 1/(d |lambda_min(X_k)|). Throws if every r-vector is
/// zero (nothing constrains epsilon).
double epsilon_max(const GeneratorSpec& spec);

/// True iff all 2x2 determinants a_i b_j - b_i a_j vanish within 1e-12.
/// Collinear directions make the "coherent" family commute as well.
bool r_vectors_collinear(const std::vector<RVector>& rs);

/// The commuting pair rho0 = diag(1/2,1/2,0), sigma0 = diag(1/2,0,1/2) and a
/// noncommuting qutrit pair with the same second-order tuple (1/2,1/2,1/4).
FamilyPair prop_qutrit_w2();

/// The d=4 pairs (rho,sigma0) and (rho,sigma1): all three states are half a
/// rank-two projection, the two pairs share the full order-<=3 tuple, yet only
/// the first commutes.
FamilyPair prop_d4_w3();

/// n qutrit states I/3 + eps(a_k M1 + b_k M2) built over a commuting diagonal
/// basis and over a noncommuting one. Pairwise second-order data agree across
/// the two families for every epsilon.
FamilyPair appendix_qutrit_family(const GeneratorSpec& spec);

/// The d=4 analogue: both direction bases share the quadratic trace tensor
/// and have vanishing cubic trace tensor, so all pairwise words of order <= 3
/// agree across the families.
FamilyPair appendix_d4_family(const GeneratorSpec& spec);

/// The commuting direction pair (D1, D2) of the construction: traceless,
/// Hermitian, Hilbert-Schmidt orthonormal, commuting.
std::array<ComplexMatrix, 2> commuting_directions(FamilyKind kind);

/// The noncommuting direction pair (A, B): same trace data, [A, B] != 0.
std::array<ComplexMatrix, 2> noncommuting_directions(FamilyKind kind);

}  // namespace setcoh
