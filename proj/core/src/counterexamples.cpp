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

#include "setcoh/counterexamples.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace setcoh {

namespace {

constexpr double kCollinearTol = 1e-12;

int direction_dim(FamilyKind kind) { return kind == FamilyKind::QutritW2 ? 3 : 4; }

ComplexMatrix direction_matrix(const std::array<ComplexMatrix, 2>& basis, const RVector& r) {
  return r[0] * basis[0] + r[1] * basis[1];
}

StateFamily build_family(const std::array<ComplexMatrix, 2>& basis,
                         const std::vector<RVector>& rs, double epsilon) {
  const int d = static_cast<int>(basis[0].rows());
  std::vector<DensityMatrix> states;
  states.reserve(rs.size());
  for (const RVector& r : rs) {
    ComplexMatrix m =
        ComplexMatrix::Identity(d, d) / static_cast<double>(d) + epsilon * direction_matrix(basis, r);
    states.emplace_back(m);
  }
  return StateFamily(std::move(states));
}

void validate_spec(const GeneratorSpec& spec) {
  if (spec.r_vectors.size() < 2) {
    throw std::invalid_argument("appendix generators need at least two r-vectors");
  }
  const double bound = epsilon_max(spec);
  if (!(spec.epsilon > 0.0) || spec.epsilon > bound) {
    throw std::invalid_argument("epsilon " + std::to_string(spec.epsilon) +
                                " outside (0, epsilon_max = " + std::to_string(bound) + "]");
  }
}

}  // namespace

std::vector<RVector> default_r_vectors(int n) {
  if (n < 1) {
    throw std::invalid_argument("default_r_vectors: n must be >= 1");
  }
  if (n == 2) {
    // The two square roots of unity are collinear; use orthogonal axes.
    return {RVector{1.0, 0.0}, RVector{0.0, 1.0}};
  }
  std::vector<RVector> rs;
  rs.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n;
    rs.push_back(RVector{std::cos(angle), std::sin(angle)});
  }
  return rs;
}

GeneratorSpec default_generator_spec(FamilyKind kind, int n) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.r_vectors = default_r_vectors(n);
  spec.epsilon = epsilon_max(spec) / 2.0;
  return spec;
}

double epsilon_max(const GeneratorSpec& spec) {
  const int d = direction_dim(spec.kind);
  const std::array<std::array<ComplexMatrix, 2>, 2> bases = {commuting_directions(spec.kind),
                                                             noncommuting_directions(spec.kind)};
  double bound = 0.0;
  bool constrained = false;
  for (const RVector& r : spec.r_vectors) {
    for (const auto& basis : bases) {
      const ComplexMatrix x = direction_matrix(basis, r);
      const double min_eig = hermitian_eig(x).eigenvalues.minCoeff();
      if (min_eig < -kCollinearTol) {
        const double b = 1.0 / (d * (-min_eig));
        bound = constrained ? std::min(bound, b) : b;
        constrained = true;
      }
    }
  }
  if (!constrained) {
    throw std::invalid_argument("epsilon_max: all r-vectors are zero");
  }
  return 0.9 * bound;
}

bool r_vectors_collinear(const std::vector<RVector>& rs) {
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      if (std::abs(rs[i][0] * rs[j][1] - rs[i][1] * rs[j][0]) > kCollinearTol) {
        return false;
      }
    }
  }
  return true;
}

FamilyPair prop_qutrit_w2() {
  ComplexMatrix rho = ComplexMatrix::Zero(3, 3);
  rho(0, 0) = 0.5;
  rho(1, 1) = 0.5;

  ComplexMatrix sigma0 = ComplexMatrix::Zero(3, 3);
  sigma0(0, 0) = 0.5;
  sigma0(2, 2) = 0.5;

  ComplexMatrix sigma1 = ComplexMatrix::Zero(3, 3);
  sigma1(0, 0) = 0.25;
  sigma1(0, 2) = 0.25;
  sigma1(1, 1) = 0.25;
  sigma1(2, 0) = 0.25;
  sigma1(2, 2) = 0.5;

  return FamilyPair{StateFamily({DensityMatrix(rho), DensityMatrix(sigma0)}),
                    StateFamily({DensityMatrix(rho), DensityMatrix(sigma1)})};
}

FamilyPair prop_d4_w3() {
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  rho(0, 0) = 0.5;
  rho(1, 1) = 0.5;

  ComplexMatrix sigma0 = ComplexMatrix::Zero(4, 4);
  sigma0(0, 0) = 0.5;
  sigma0(2, 2) = 0.5;

  // Half the projector onto span{(e1+e3)/sqrt(2), (e2+e4)/sqrt(2)}.
  ComplexMatrix sigma1 = ComplexMatrix::Zero(4, 4);
  for (const auto& [i, j] : {std::pair{0, 2}, std::pair{1, 3}}) {
    sigma1(i, i) = 0.25;
    sigma1(j, j) = 0.25;
    sigma1(i, j) = 0.25;
    sigma1(j, i) = 0.25;
  }

  return FamilyPair{StateFamily({DensityMatrix(rho), DensityMatrix(sigma0)}),
                    StateFamily({DensityMatrix(rho), DensityMatrix(sigma1)})};
}

FamilyPair appendix_qutrit_family(const GeneratorSpec& spec) {
  if (spec.kind != FamilyKind::QutritW2) {
    throw std::invalid_argument("appendix_qutrit_family: spec kind must be QutritW2");
  }
  validate_spec(spec);
  return FamilyPair{build_family(commuting_directions(spec.kind), spec.r_vectors, spec.epsilon),
                    build_family(noncommuting_directions(spec.kind), spec.r_vectors, spec.epsilon)};
}

FamilyPair appendix_d4_family(const GeneratorSpec& spec) {
  if (spec.kind != FamilyKind::D4Order3) {
    throw std::invalid_argument("appendix_d4_family: spec kind must be D4Order3");
  }
  validate_spec(spec);
  return FamilyPair{build_family(commuting_directions(spec.kind), spec.r_vectors, spec.epsilon),
                    build_family(noncommuting_directions(spec.kind), spec.r_vectors, spec.epsilon)};
}

std::array<ComplexMatrix, 2> commuting_directions(FamilyKind kind) {
  if (kind == FamilyKind::QutritW2) {
    ComplexMatrix d1 = ComplexMatrix::Zero(3, 3);
    d1(0, 0) = 1.0 / std::sqrt(2.0);
    d1(1, 1) = -1.0 / std::sqrt(2.0);
    ComplexMatrix d2 = ComplexMatrix::Zero(3, 3);
    d2(0, 0) = 1.0 / std::sqrt(6.0);
    d2(1, 1) = 1.0 / std::sqrt(6.0);
    d2(2, 2) = -2.0 / std::sqrt(6.0);
    return {d1, d2};
  }
  ComplexMatrix d1 = ComplexMatrix::Zero(4, 4);
  d1(0, 0) = 1.0 / std::sqrt(2.0);
  d1(1, 1) = -1.0 / std::sqrt(2.0);
  ComplexMatrix d2 = ComplexMatrix::Zero(4, 4);
  d2(2, 2) = 1.0 / std::sqrt(2.0);
  d2(3, 3) = -1.0 / std::sqrt(2.0);
  return {d1, d2};
}

std::array<ComplexMatrix, 2> noncommuting_directions(FamilyKind kind) {
  if (kind == FamilyKind::QutritW2) {
    const ComplexMatrix a = commuting_directions(kind)[0];
    ComplexMatrix b = ComplexMatrix::Zero(3, 3);
    b(0, 2) = 1.0 / std::sqrt(2.0);
    b(2, 0) = 1.0 / std::sqrt(2.0);
    return {a, b};
  }
  // sigma_z (x) I_2 / 2 and sigma_x (x) I_2 / 2.
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  ComplexMatrix a(4, 4);
  ComplexMatrix b(4, 4);
  const ComplexMatrix sz = pauli_z();
  const ComplexMatrix sx = pauli_x();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      a.block(2 * i, 2 * j, 2, 2) = 0.5 * sz(i, j) * i2;
      b.block(2 * i, 2 * j, 2, 2) = 0.5 * sx(i, j) * i2;
    }
  }
  return {a, b};
}

}  // namespace setcoh
