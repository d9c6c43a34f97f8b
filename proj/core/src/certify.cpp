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

#include "setcoh/certify.hpp"

#include <cmath>
#include <stdexcept>

namespace setcoh {

namespace {

// Double-double arithmetic (Dekker/Knuth error-free transformations). The two
// fourth-order trace words sit near 0.01..1 while their difference on an
// almost-commuting pair is below 1e-30; plain double evaluation leaves ~1e-16
// of cancellation noise, far above kDefaultGapThreshold. Accumulating both
// words in ~31 significant digits keeps the difference meaningful.

struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {  // requires |a| >= |b|
  const double s = a + b;
  return {s, b - (s - a)};
}

inline void veltkamp_split(double a, double& hi, double& lo) {
  const double c = 134217729.0 * a;  // 2^27 + 1
  hi = c - (c - a);
  lo = a - hi;
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  double ah, al, bh, bl;
  veltkamp_split(a, ah, al);
  veltkamp_split(b, bh, bl);
  const double e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
  return {p, e};
}

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline DD dd_sub(DD a, DD b) { return dd_add(a, DD{-b.hi, -b.lo}); }

inline DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

struct DDComplex {
  DD re, im;
};

inline DDComplex ddc_add(DDComplex a, DDComplex b) {
  return {dd_add(a.re, b.re), dd_add(a.im, b.im)};
}

inline DDComplex ddc_mul(DDComplex a, DDComplex b) {
  return {dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
          dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

inline DDComplex ddc_mul_doubles(Complex a, Complex b) {
  return {dd_sub(two_prod(a.real(), b.real()), two_prod(a.imag(), b.imag())),
          dd_add(two_prod(a.real(), b.imag()), two_prod(a.imag(), b.real()))};
}

using DDMatrix = std::vector<DDComplex>;  // row-major d x d

DDMatrix dd_matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int d = static_cast<int>(a.rows());
  DDMatrix out(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      DDComplex acc{};
      for (int k = 0; k < d; ++k) {
        acc = ddc_add(acc, ddc_mul_doubles(a(i, k), b(k, j)));
      }
      out[static_cast<std::size_t>(i) * d + j] = acc;
    }
  }
  return out;
}

// Tr(A B) = sum_{i,j} A_ij B_ji for row-major double-double matrices.
DD dd_trace_prod(const DDMatrix& a, const DDMatrix& b, int d) {
  DDComplex acc{};
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      acc = ddc_add(acc, ddc_mul(a[static_cast<std::size_t>(i) * d + j],
                                 b[static_cast<std::size_t>(j) * d + i]));
    }
  }
  return acc.re;  // both traces here are real for Hermitian inputs
}

void require_same_dim(const DensityMatrix& rho, const DensityMatrix& sigma, const char* who) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument(std::string(who) + ": dimension mismatch (" +
                                std::to_string(rho.dim()) + " vs " +
                                std::to_string(sigma.dim()) + ")");
  }
}

}  // namespace

double gamma(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "gamma");
  const int d = rho.dim();
  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix& s = sigma.matrix();

  const DDMatrix rr = dd_matmul(r, r);
  const DDMatrix ss = dd_matmul(s, s);
  const DDMatrix rs = dd_matmul(r, s);

  const DD word_grouped = dd_trace_prod(rr, ss, d);     // Tr(rho^2 sigma^2)
  const DD word_alternating = dd_trace_prod(rs, rs, d);  // Tr(rho sigma rho sigma)

  const DD gap = dd_sub(word_grouped, word_alternating);
  return gap.hi + gap.lo;
}

double gamma_spectral(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "gamma_spectral");
  const EigenDecomposition eig = hermitian_eig(rho.matrix());
  const ComplexMatrix s = eig.eigenvectors.adjoint() * sigma.matrix() * eig.eigenvectors;
  const int d = rho.dim();
  double sum = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double diff = eig.eigenvalues(i) - eig.eigenvalues(j);
      sum += diff * diff * std::norm(s(i, j));
    }
  }
  return sum;
}

double total_gap(const StateFamily& fam) {
  double sum = 0.0;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      sum += gamma(fam[i], fam[j]);
    }
  }
  return sum;
}

CoherenceVerdict decide_set_coherence(const StateFamily& fam, double threshold) {
  CoherenceVerdict verdict;
  verdict.threshold = threshold;
  double max_gap = 0.0;
  std::pair<int, int> max_pair{0, 0};
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      const double g = gamma(fam[i], fam[j]);
      verdict.pair_gaps.push_back(PairGap{static_cast<int>(i) + 1, static_cast<int>(j) + 1, g});
      verdict.total_gap += g;
      if (g > threshold) {
        verdict.incoherent = false;
      }
      if (g > max_gap) {
        max_gap = g;
        max_pair = {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
      }
    }
  }
  if (!verdict.incoherent) {
    verdict.witness_pair = max_pair;
  }
  return verdict;
}

bool commutator_oracle(const StateFamily& fam, double tol) {
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      if (hs_norm(commutator(fam[i].matrix(), fam[j].matrix())) > tol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace setcoh
