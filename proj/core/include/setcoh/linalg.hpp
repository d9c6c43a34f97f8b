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

#include <complex>

#include <Eigen/Dense>

namespace setcoh {

using Complex = std::complex<double>;

/// Dense complex matrix, the arithmetic substrate for every operator in the
/// library. Small dimensions only (d <= ~16); everything is value-semantic.
using ComplexMatrix = Eigen::MatrixXcd;

/// Result of a Hermitian eigendecomposition: eigenvalues ascending,
/// eigenvector matrix unitary with eigenvectors as columns.
struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Matrix product. Both operands must be square with equal dimension.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Sum of diagonal entries.
Complex trace(const ComplexMatrix& a);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// AB - BA. Equal dimensions required. commutator(a, a) is exactly zero.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Squared Hilbert-Schmidt (Frobenius) norm: sum of |a_ij|^2.
double hs_norm_sq(const ComplexMatrix& a);

/// Hilbert-Schmidt norm sqrt(Tr(A^dag A)).
double hs_norm(const ComplexMatrix& a);

/// ||A - A^dag||_2, the deviation from Hermiticity.
double hermiticity_residual(const ComplexMatrix& a);

/// Scale-aware Hermiticity tolerance: 1e-10 * max(1, ||A||_2).
double herm_tolerance(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a);

/// Eigendecomposition of a Hermitian matrix. The input must be Hermitian
/// within herm_tolerance(a); it is symmetrized as (A + A^dag)/2 before the
/// solve so roundoff drift cannot leak into the spectrum. Eigenvalues come
/// back ascending with a stable order on degeneracies.
///
/// Throws std::invalid_argument for non-square or non-Hermitian input.
EigenDecomposition hermitian_eig(const ComplexMatrix& a);

/// True iff the minimum eigenvalue is >= -tol. Input must be Hermitian.
bool is_psd(const ComplexMatrix& a, double tol);

}  // namespace setcoh
