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

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "setcoh/linalg.hpp"

namespace setcoh {

/// Default validation tolerance for PSD and unit-trace checks.
inline constexpr double kStateTol = 1e-10;

/// A density-matrix invariant was violated at construction. The residual is
/// the measured size of the violation.
class StateError : public std::runtime_error {
 public:
  StateError(const std::string& msg, double residual)
      : std::runtime_error(msg), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class NotHermitianError : public StateError {
  using StateError::StateError;
};

class NotPsdError : public StateError {
  using StateError::StateError;
};

class TraceNotOneError : public StateError {
  using StateError::StateError;
};

/// A validated quantum state: Hermitian, positive semidefinite, unit trace.
/// Validation is eager; anything downstream may assume the invariants hold.
/// The stored matrix is symmetrized as (M + M^dag)/2 once the Hermiticity
/// check passes.
class DensityMatrix {
 public:
  /// Validates and wraps `m`. `tol` bounds the PSD and trace residuals; the
  /// Hermiticity bound is herm_tolerance(m). Throws NotHermitianError,
  /// NotPsdError or TraceNotOneError naming the violated invariant and the
  /// measured residual.
  explicit DensityMatrix(const ComplexMatrix& m, double tol = kStateTol);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& matrix() const { return mat_; }

  /// Tr(rho^2), in [1/d, 1].
  double purity() const { return mat_.squaredNorm(); }

 private:
  ComplexMatrix mat_;
};

/// An ordered, immutable family of states sharing one dimension (n >= 1).
class StateFamily {
 public:
  explicit StateFamily(std::vector<DensityMatrix> states);

  int dim() const { return states_.front().dim(); }
  std::size_t size() const { return states_.size(); }
  const DensityMatrix& operator[](std::size_t i) const { return states_[i]; }
  auto begin() const { return states_.begin(); }
  auto end() const { return states_.end(); }

 private:
  std::vector<DensityMatrix> states_;
};

/// Real 3-vector parametrizing a qubit state via rho = (I + r . sigma)/2.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double norm() const;
};

// Pauli matrices in the standard computational-basis representation (fixes
// the sign conventions of the Bloch map).
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Qubit state (I_2 + r . sigma)/2. Requires |r| <= 1.
DensityMatrix from_bloch(const BlochVector& r);

/// Inverse of from_bloch. Requires dim 2.
BlochVector to_bloch(const DensityMatrix& rho);

/// Convex mixture (1-p) rho + p I_d/d. Requires p in [0, 1].
DensityMatrix depolarize(const DensityMatrix& rho, double p);

/// Direct sum with a zero block up to target_dim. Preserves every trace word
/// and every commutator exactly. Requires target_dim >= rho.dim().
DensityMatrix pad_embed(const DensityMatrix& rho, int target_dim);

/// Ginibre-induced (Hilbert-Schmidt measure) random state: G G^dag normalized
/// by its trace, G a dim x dim matrix of independent standard complex
/// Gaussians. Deterministic for a fixed seed, full rank almost surely.
DensityMatrix random_density(int dim, std::uint64_t seed);

/// n random spectra conjugated by one shared random unitary: a set-incoherent
/// family by construction, with pairwise commutators at roundoff level.
StateFamily random_commuting_family(int dim, int n, std::uint64_t seed);

/// Square matrix of independent standard complex Gaussians.
ComplexMatrix random_ginibre(int dim, std::mt19937_64& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fixing).
ComplexMatrix random_unitary(int dim, std::mt19937_64& rng);

}  // namespace setcoh
