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
#include <optional>
#include <stdexcept>

#include "setcoh/invariants.hpp"
#include "setcoh/states.hpp"

namespace setcoh {

/// Second-order data of a pair: the two purities and their overlap,
/// (Tr rho^2, Tr sigma^2, Tr(rho sigma)).
struct QubitW2Tuple {
  double purity_rho = 0.0;
  double purity_sigma = 0.0;
  double overlap = 0.0;
};

/// Order-<=3 data of a pair: the second-order entries plus the cubic moments
/// Tr rho^3, Tr sigma^3 and the mixed moments Tr(rho^2 sigma), Tr(rho sigma^2).
struct QutritW3Tuple {
  double purity_rho = 0.0;
  double purity_sigma = 0.0;
  double overlap = 0.0;
  double cubic_rho = 0.0;
  double cubic_sigma = 0.0;
  double rho2_sigma = 0.0;
  double rho_sigma2 = 0.0;
};

/// Where a second-order tuple falls for qubit pairs: outside the attainable
/// set, on the commuting boundary, or in the noncommuting interior.
enum class RegionClass { OutsideB, BoundaryC, InteriorI };

/// The moments fed to the cubic do not come from any qutrit state (complex or
/// out-of-range roots beyond tolerance). residual() is the offending
/// imaginary part or interval excess.
class InvalidMomentsError : public std::runtime_error {
 public:
  InvalidMomentsError(const std::string& msg, double residual)
      : std::runtime_error(msg), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Classifies a second-order tuple for qubit pairs. With s denoting
/// (2z-1)^2 - (2x-1)(2y-1):
///   OutsideB  when x or y leaves [1/2 - tol, 1 + tol] or s > tol,
///   BoundaryC when |s| <= tol (the commuting pairs),
///   InteriorI otherwise (noncommuting pairs).
RegionClass qubit_w2_classify(const QubitW2Tuple& t, double tol = 1e-8);

/// Recovers a qutrit spectrum from (Tr rho^2, Tr rho^3): the roots of
///   t^3 - t^2 + ((1 - purity)/2) t - (1 - 3 purity + 2 cubic)/6 = 0,
/// returned descending. Roots are computed through a companion-matrix
/// eigensolve; imaginary residues <= 1e-8 are discarded and roots within
/// 1e-8 of [0, 1] are clamped. Anything worse throws InvalidMomentsError.
std::array<double, 3> qutrit_eigs_from_moments(double purity, double cubic);

/// A concrete simultaneous diagonal realization compatible with a tuple:
/// both recovered spectra plus the permutation aligning sigma's to rho's.
/// sigma_spectrum is already permuted, so diag(rho_spectrum) and
/// diag(sigma_spectrum) realize the tuple directly.
struct QutritWitness {
  std::array<double, 3> rho_spectrum{};
  std::array<double, 3> sigma_spectrum{};
  std::array<int, 3> permutation{};
};

/// Decides whether an order-<=3 qutrit tuple is compatible with a commuting
/// pair: recover both spectra, then look for an assignment of sigma's
/// spectrum to rho's that reproduces the three mixed moments, each within
/// tol. Eigenvalues closer than spectrum_tol are grouped, and only distinct
/// matchings over the groups are tried, so degenerate spectra are handled by
/// construction. Returns the witnessing assignment, or nullopt.
///
/// Precondition (not checked): the tuple must be attainable by some qutrit
/// pair. Tuples outside that set may still pass the permutation check.
std::optional<QutritWitness> qutrit_w3_incoherent_compatible(const QutritW3Tuple& t,
                                                             double tol = 1e-8,
                                                             double spectrum_tol = 1e-7);

/// Second-order tuple of a 2-state family.
QubitW2Tuple w2_tuple(const StateFamily& pair);

/// Order-<=3 tuple of a 2-state family.
QutritW3Tuple w3_tuple(const StateFamily& pair);

}  // namespace setcoh
