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

#include "setcoh/states.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace setcoh {

DensityMatrix::DensityMatrix(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("DensityMatrix: matrix must be square and nonempty");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument("DensityMatrix: entries must be finite");
  }
  const double herm_res = hermiticity_residual(m);
  if (herm_res > herm_tolerance(m)) {
    throw NotHermitianError("state is not Hermitian: ||M - M^dag||_2 = " +
                                std::to_string(herm_res),
                            herm_res);
  }
  const double trace_res = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_res > tol) {
    throw TraceNotOneError("state trace differs from one by " + std::to_string(trace_res),
                           trace_res);
  }
  ComplexMatrix sym = 0.5 * (m + m.adjoint().eval());
  const double min_eig = hermitian_eig(sym).eigenvalues.minCoeff();
  if (min_eig < -tol) {
    throw NotPsdError("state is not positive semidefinite: min eigenvalue = " +
                          std::to_string(min_eig),
                      min_eig);
  }
  mat_ = std::move(sym);
}

StateFamily::StateFamily(std::vector<DensityMatrix> states) : states_(std::move(states)) {
  if (states_.empty()) {
    throw std::invalid_argument("StateFamily: at least one state required");
  }
  const int d = states_.front().dim();
  for (const auto& s : states_) {
    if (s.dim() != d) {
      throw std::invalid_argument("StateFamily: all states must share one dimension");
    }
  }
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

DensityMatrix from_bloch(const BlochVector& r) {
  if (r.norm() > 1.0 + 1e-12) {
    throw std::invalid_argument("from_bloch: |r| = " + std::to_string(r.norm()) + " exceeds 1");
  }
  ComplexMatrix m = 0.5 * (ComplexMatrix::Identity(2, 2) + r.x * pauli_x() + r.y * pauli_y() +
                           r.z * pauli_z());
  return DensityMatrix(m);
}

BlochVector to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw std::invalid_argument("to_bloch: state must be a qubit");
  }
  const ComplexMatrix& m = rho.matrix();
  return BlochVector{2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(),
                     m(0, 0).real() - m(1, 1).real()};
}

DensityMatrix depolarize(const DensityMatrix& rho, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("depolarize: p must lie in [0, 1]");
  }
  const int d = rho.dim();
  ComplexMatrix m = (1.0 - p) * rho.matrix() + (p / d) * ComplexMatrix::Identity(d, d);
  return DensityMatrix(m);
}

DensityMatrix pad_embed(const DensityMatrix& rho, int target_dim) {
  const int d = rho.dim();
  if (target_dim < d) {
    throw std::invalid_argument("pad_embed: target dimension " + std::to_string(target_dim) +
                                " is smaller than state dimension " + std::to_string(d));
  }
  ComplexMatrix m = ComplexMatrix::Zero(target_dim, target_dim);
  m.topLeftCorner(d, d) = rho.matrix();
  return DensityMatrix(m);
}

ComplexMatrix random_ginibre(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix random_unitary(int dim, std::mt19937_64& rng) {
  ComplexMatrix g = random_ginibre(dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the column phases so the distribution is Haar, not merely unitary.
  for (int j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    if (a > 0.0) {
      q.col(j) *= rjj / a;
    }
  }
  return q;
}

DensityMatrix random_density(int dim, std::uint64_t seed) {
  if (dim < 1) {
    throw std::invalid_argument("random_density: dim must be >= 1");
  }
  std::mt19937_64 rng(seed);
  ComplexMatrix g = random_ginibre(dim, rng);
  ComplexMatrix w = g * g.adjoint();
  w = 0.5 * (w + w.adjoint().eval());
  return DensityMatrix(w / w.trace().real());
}

StateFamily random_commuting_family(int dim, int n, std::uint64_t seed) {
  if (dim < 1 || n < 1) {
    throw std::invalid_argument("random_commuting_family: dim and n must be >= 1");
  }
  std::mt19937_64 rng(seed);
  const ComplexMatrix u = random_unitary(dim, rng);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  std::vector<DensityMatrix> states;
  states.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXd spectrum(dim);
    double total = 0.0;
    for (int i = 0; i < dim; ++i) {
      // Flat Dirichlet spectrum via normalized exponentials.
      spectrum(i) = -std::log(1.0 - uniform(rng));
      total += spectrum(i);
    }
    spectrum /= total;
    ComplexMatrix m = u * spectrum.cast<Complex>().asDiagonal() * u.adjoint();
    m = 0.5 * (m + m.adjoint().eval());
    states.emplace_back(m);
  }
  return StateFamily(std::move(states));
}

}  // namespace setcoh
