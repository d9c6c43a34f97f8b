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

#include <random>

#include "setcoh/linalg.hpp"

namespace testsupport {

using setcoh::Complex;
using setcoh::ComplexMatrix;

inline ComplexMatrix random_matrix(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      m(i, j) = Complex(normal(rng), normal(rng));
    }
  }
  return m;
}

inline ComplexMatrix random_hermitian(int d, std::mt19937_64& rng) {
  ComplexMatrix m = random_matrix(d, rng);
  return 0.5 * (m + m.adjoint().eval());
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// The explicit 3x3 pair with matching second-order data: a commuting state
// next to a noncommuting one.
inline ComplexMatrix qutrit_rho() {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  return m;
}

inline ComplexMatrix qutrit_sigma_offdiag() {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = 0.25;
  m(0, 2) = 0.25;
  m(1, 1) = 0.25;
  m(2, 0) = 0.25;
  m(2, 2) = 0.5;
  return m;
}

// The explicit d=4 trio: rho = diag(1,1,0,0)/2 and the rotated half-projector
// sigma1 with 1/4 entries linking e1<->e3 and e2<->e4.
inline ComplexMatrix d4_rho() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  return m;
}

inline ComplexMatrix d4_sigma1() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 0.25;
  m(2, 2) = 0.25;
  m(0, 2) = 0.25;
  m(2, 0) = 0.25;
  m(1, 1) = 0.25;
  m(3, 3) = 0.25;
  m(1, 3) = 0.25;
  m(3, 1) = 0.25;
  return m;
}

}  // namespace testsupport
