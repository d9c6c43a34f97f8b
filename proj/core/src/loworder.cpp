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

#include "setcoh/loworder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace setcoh {

RegionClass qubit_w2_classify(const QubitW2Tuple& t, double tol) {
  const double lo = 0.5 - tol;
  const double hi = 1.0 + tol;
  if (t.purity_rho < lo || t.purity_rho > hi || t.purity_sigma < lo || t.purity_sigma > hi) {
    return RegionClass::OutsideB;
  }
  const double lhs = (2.0 * t.overlap - 1.0) * (2.0 * t.overlap - 1.0);
  const double rhs = (2.0 * t.purity_rho - 1.0) * (2.0 * t.purity_sigma - 1.0);
  const double s = lhs - rhs;
  if (s > tol) return RegionClass::OutsideB;
  if (std::abs(s) <= tol) return RegionClass::BoundaryC;
  return RegionClass::InteriorI;
}

std::array<double, 3> qutrit_eigs_from_moments(double purity, double cubic) {
  // Monic cubic t^3 - t^2 + c1 t + c0 whose roots are the spectrum. Unit
  // trace pins the centroid, so the depressed form s^3 + p s + q always sits
  // around t = 1/3.
  const double c1 = (1.0 - purity) / 2.0;
  const double c0 = -(1.0 - 3.0 * purity + 2.0 * cubic) / 6.0;
  const double p = c1 - 1.0 / 3.0;
  const double q = (9.0 * c1 + 27.0 * c0 - 2.0) / 27.0;

  constexpr double kRootTol = 1e-8;  // imaginary residues and interval slack

  std::array<double, 3> s{};
  bool solved = false;
  if (std::abs(p) <= 1e-12 && std::abs(q) <= 1e-15) {
    // Coefficient-noise zone of the triple root (t - 1/3)^3. Moments in
    // double precision cannot resolve splittings below ~cbrt(noise) here, so
    // the degenerate spectrum is the honest answer.
    solved = true;
  } else if (p < 0.0) {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double u = 3.0 * q / (p * m);
    if (std::abs(u) <= 1.0) {
      const double phi = std::acos(u);
      for (std::size_t k = 0; k < 3; ++k) {
        s[k] = m * std::cos((phi - 2.0 * std::numbers::pi * k) / 3.0);
      }
      solved = true;
    }
  }
  if (!solved) {
    // One isolated real root r; the leftover quadratic s^2 + r s + (r^2 + p)
    // decides whether its pair is near-double (imaginary residue discarded)
    // or genuinely complex (rejected).
    double r;
    if (p < 0.0) {
      const double scale = std::sqrt(-p / 3.0);
      const double u = std::abs(q) * 3.0 / (-p * 2.0 * scale);
      r = (q >= 0.0 ? -2.0 : 2.0) * scale * std::cosh(std::acosh(u) / 3.0);
    } else {
      const double surd = std::sqrt(0.25 * q * q + p * p * p / 27.0);
      r = std::cbrt(-0.5 * q + surd) + std::cbrt(-0.5 * q - surd);
    }
    const double imag_sq = 0.75 * r * r + p;
    if (imag_sq > kRootTol * kRootTol) {
      const double residual = std::sqrt(std::max(imag_sq, 0.0));
      throw InvalidMomentsError("moments give a complex spectrum (imaginary residual " +
                                    std::to_string(residual) + ")",
                                residual);
    }
    s = {r, -0.5 * r, -0.5 * r};
  }

  std::array<double, 3> roots{};
  for (std::size_t i = 0; i < 3; ++i) {
    double r = s[i] + 1.0 / 3.0;
    if (r < 0.0) {
      if (r < -kRootTol) {
        throw InvalidMomentsError(
            "moments give a negative eigenvalue (" + std::to_string(r) + ")", -r);
      }
      r = 0.0;
    } else if (r > 1.0) {
      if (r > 1.0 + kRootTol) {
        throw InvalidMomentsError(
            "moments give an eigenvalue above one (" + std::to_string(r) + ")", r - 1.0);
      }
      r = 1.0;
    }
    roots[i] = r;
  }
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return roots;
}

namespace {

// Group ids for a descending spectrum: entries within tol of their neighbor
// share a group.
std::array<int, 3> group_ids(const std::array<double, 3>& desc, double tol) {
  std::array<int, 3> ids{0, 0, 0};
  for (std::size_t i = 1; i < 3; ++i) {
    ids[i] = ids[i - 1] + ((desc[i - 1] - desc[i]) > tol ? 1 : 0);
  }
  return ids;
}

}  // namespace

std::optional<QutritWitness> qutrit_w3_incoherent_compatible(const QutritW3Tuple& t, double tol,
                                                             double spectrum_tol) {
  const std::array<double, 3> p = qutrit_eigs_from_moments(t.purity_rho, t.cubic_rho);
  const std::array<double, 3> q = qutrit_eigs_from_moments(t.purity_sigma, t.cubic_sigma);

  const std::array<int, 3> pg = group_ids(p, spectrum_tol);
  const std::array<int, 3> qg = group_ids(q, spectrum_tol);

  static constexpr std::array<std::array<int, 3>, 6> kPerms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

  // Permutations that move eigenvalues only within a degeneracy group are the
  // same matching; enumerate each distinct group-level matching once.
  std::set<std::array<int, 9>> seen;
  for (const auto& perm : kPerms) {
    std::array<int, 9> signature{};
    for (std::size_t i = 0; i < 3; ++i) {
      signature[3 * pg[i] + qg[perm[i]]]++;
    }
    if (!seen.insert(signature).second) continue;

    double z = 0.0, c = 0.0, d = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const double pi = p[i];
      const double qi = q[perm[i]];
      z += pi * qi;
      c += pi * pi * qi;
      d += pi * qi * qi;
    }
    if (std::abs(z - t.overlap) <= tol && std::abs(c - t.rho2_sigma) <= tol &&
        std::abs(d - t.rho_sigma2) <= tol) {
      QutritWitness witness;
      witness.rho_spectrum = p;
      witness.permutation = perm;
      for (std::size_t i = 0; i < 3; ++i) {
        witness.sigma_spectrum[i] = q[perm[i]];
      }
      return witness;
    }
  }
  return std::nullopt;
}

namespace {

void require_pair(const StateFamily& fam, const char* who) {
  if (fam.size() != 2) {
    throw std::invalid_argument(std::string(who) + ": family must hold exactly two states");
  }
}

}  // namespace

QubitW2Tuple w2_tuple(const StateFamily& pair) {
  require_pair(pair, "w2_tuple");
  const InvariantTuple values = evaluate(scenario_w2(), pair);
  return QubitW2Tuple{values.real_value(Word::parse("11")), values.real_value(Word::parse("22")),
                      values.real_value(Word::parse("12"))};
}

QutritW3Tuple w3_tuple(const StateFamily& pair) {
  require_pair(pair, "w3_tuple");
  const InvariantTuple values = evaluate(scenario_w3(), pair);
  return QutritW3Tuple{values.real_value(Word::parse("11")),  values.real_value(Word::parse("22")),
                       values.real_value(Word::parse("12")),  values.real_value(Word::parse("111")),
                       values.real_value(Word::parse("222")), values.real_value(Word::parse("112")),
                       values.real_value(Word::parse("122"))};
}

}  // namespace setcoh
