// Copyright (c) 2026 The hexfs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "hexfs/basis.hpp"
#include "hexfs/kernels.hpp"
#include "hexfs/quadrature.hpp"

namespace hexfs {

/// Fourier coefficients f_j for every j in H_{n_max}, stored in IndexSet order.
class CoefficientTable {
public:
  explicit CoefficientTable(int n_max);

  int n_max() const { return indices_.radius(); }
  const IndexSet& indices() const { return indices_; }
  const std::vector<std::complex<double>>& values() const { return values_; }

  std::complex<double> at(const HexIndex& j) const { return values_[indices_.position(j)]; }
  void set(const HexIndex& j, std::complex<double> v) { values_[indices_.position(j)] = v; }

  /// max |f_j| over the ring J_k.
  double ring_max(int k) const;

  /// entry(-j) == conj(entry(j)) within tol for all j.
  bool conjugate_symmetric(double tol = 1e-12) const;

private:
  IndexSet indices_;
  std::vector<std::complex<double>> values_;
};

/// Discrete coefficients of the samples for all j in H_{n_max}. Uses separable
/// row/column summation: O(3N^2 (4 n_max + 1) + |H_{n_max}| 2N).
CoefficientTable compute_coefficients(const GridFunction& g, int n_max);

/// sum over j in H_K of multipliers[degree(j)] f_j phi_j(t), K = multipliers.size() - 1.
std::complex<double> apply_ring_multipliers(const CoefficientTable& coeffs,
                                            std::span<const double> multipliers,
                                            const HomogeneousPoint& t);

/// Same sum evaluated at every node of grid with separable summation.
GridFunction evaluate_on_grid(const CoefficientTable& coeffs, std::span<const double> multipliers,
                              std::shared_ptr<const HexGrid> grid);

/// S_n(f)(t) = sum_{j in H_n} f_j phi_j(t). Throws std::invalid_argument for n > n_max.
std::complex<double> partial_sum(const CoefficientTable& coeffs, int n, const HomogeneousPoint& t);

/// (1/|Omega|) int f(s) D_n(t - s) ds by the lattice rule of the samples' grid.
std::complex<double> partial_sum_conv(const GridFunction& f, int n, const HomogeneousPoint& t);

/// Weight of ring k in S_n^delta: A_{n-k}^delta / A_n^delta. Throws for k outside [0, n].
double cesaro_multiplier(int n, CesaroOrder order, int k);

/// cesaro_multiplier(n, order, k) for k = 0..n.
std::vector<double> cesaro_multipliers(int n, CesaroOrder order);

/// S_n^delta(f)(t) by per-ring multipliers.
std::complex<double> cesaro_mean(const CoefficientTable& coeffs, int n, CesaroOrder order,
                                 const HomogeneousPoint& t);

/// (1/|Omega|) int f(s) K_n^delta(t - s) ds by the lattice rule.
std::complex<double> cesaro_mean_conv(const GridFunction& f, int n, CesaroOrder order,
                                      const HomogeneousPoint& t);

/// Tail estimate max_{k > K} ring_max(k) * sum_{K < k <= n_max} 6 k r^k of the
/// rings dropped by truncating U_r after ring K (0 when K >= n_max).
double abel_poisson_tail(const CoefficientTable& coeffs, double r, int K);

/// Number of rings summed by abel_poisson: the first K >= 0 with
/// abel_poisson_tail(coeffs, r, K) < tol, and n_max when none qualifies.
int abel_poisson_truncation(const CoefficientTable& coeffs, double r, double tol);

/// r^0 ... r^K
std::vector<double> poisson_multipliers(double r, int rings);

/// U_r(f)(t) = sum_k r^k sum_{j in J_k} f_j phi_j(t). Throws std::domain_error
/// unless 0 <= r < 1.
std::complex<double> abel_poisson(const CoefficientTable& coeffs, double r,
                                  const HomogeneousPoint& t, double tol = 1e-10);

/// (1/|Omega|) int f(s) P_r(t - s) ds with the closed-form Poisson kernel.
std::complex<double> abel_poisson_conv(const GridFunction& f, double r, const HomogeneousPoint& t);

/// Both sides of
///   S_n^delta = (1/A_n^delta) sum_k A_{n-k}^{delta-2} A_k^1 S_k^1,
/// valid for delta >= 1. Throws std::invalid_argument for delta < 1.
std::pair<std::complex<double>, std::complex<double>> ulyanov_identity_check(
    const CoefficientTable& coeffs, int n, double delta, const HomogeneousPoint& t);

}  // namespace hexfs
