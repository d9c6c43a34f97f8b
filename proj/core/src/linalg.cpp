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

#include "setcoh/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace setcoh {

namespace {

void require_square(const ComplexMatrix& a, const char* who) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square and nonempty, got " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* who) {
  require_square(a, who);
  require_square(b, who);
  if (a.rows() != b.rows()) {
    throw std::invalid_argument(std::string(who) + ": dimension mismatch (" +
                                std::to_string(a.rows()) + " vs " + std::to_string(b.rows()) + ")");
  }
}

}  // namespace

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matmul");
  return a * b;
}

Complex trace(const ComplexMatrix& a) { return a.trace(); }

ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

double hs_norm_sq(const ComplexMatrix& a) { return a.squaredNorm(); }

double hs_norm(const ComplexMatrix& a) { return a.norm(); }

double hermiticity_residual(const ComplexMatrix& a) {
  return (a - a.adjoint().eval()).norm();
}

double herm_tolerance(const ComplexMatrix& a) {
  return 1e-10 * std::max(1.0, a.norm());
}

bool is_hermitian(const ComplexMatrix& a) {
  return a.rows() == a.cols() && hermiticity_residual(a) <= herm_tolerance(a);
}

EigenDecomposition hermitian_eig(const ComplexMatrix& a) {
  require_square(a, "hermitian_eig");
  const double residual = hermiticity_residual(a);
  if (residual > herm_tolerance(a)) {
    throw std::invalid_argument("hermitian_eig: input is not Hermitian (residual " +
                                std::to_string(residual) + ")");
  }
  const ComplexMatrix sym = 0.5 * (a + a.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  }
  return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

bool is_psd(const ComplexMatrix& a, double tol) {
  return hermitian_eig(a).eigenvalues.minCoeff() >= -tol;
}

}  // namespace setcoh
