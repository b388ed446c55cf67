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

#include <vector>

#include "hexfs/basis.hpp"
#include "hexfs/hexcoord.hpp"

namespace hexfs {

/// Summability order delta > 0 of a Cesaro (C, delta) mean.
class CesaroOrder {
public:
  /// Throws std::invalid_argument unless delta > 0.
  explicit CesaroOrder(double delta);
  double delta() const { return delta_; }

private:
  double delta_;
};

/// Guard for the closed-form kernels: when |sin(pi (ti - tj) / 3)| drops below
/// threshold for some pair, the closed form is 0/0 and direct summation is used.
struct SingularityPolicy {
  double threshold = 1e-8;

  /// Throws std::invalid_argument unless threshold > 0.
  void validate() const;
};

/// A_n^delta = prod_{k=1..n} (delta + k) / k, the (C, delta) binomial weight.
/// Accepts delta >= -1 (A_n^{-1} = [n == 0]); throws for delta < -1 or n < 0.
double binom_a(int n, double delta);

/// A_0^delta ... A_{n_max}^delta by running product.
std::vector<double> binom_a_table(int n_max, double delta);

/// Ring sums sum_{j in J_k} phi_j(t) (real parts) for k = 0..n.
std::vector<double> ring_sums(int n, const HomogeneousPoint& t);

/// D_n(t) = sum_{j in H_n} phi_j(t), by direct character summation.
double dirichlet_direct(int n, const HomogeneousPoint& t);

/// D_0(t), ..., D_n(t) by direct summation in O(|H_n|).
std::vector<double> dirichlet_direct_all(int n, const HomogeneousPoint& t);

/// True when the closed-form denominators vanish below the policy threshold.
bool is_singular(const HomogeneousPoint& t, const SingularityPolicy& policy = {});

/// Theta_n(t): product of sin((n+1) d) / sin(d) over the three pairwise
/// differences d = pi (ti - tj) / 3. Theta_{-1} = 0. Falls back to
/// sum_{k<=n} D_k(t) on singular lines.
double theta(int n, const HomogeneousPoint& t, const SingularityPolicy& policy = {});

/// D_n = Theta_n - Theta_{n-1}, O(1) in n away from singular lines.
double dirichlet(int n, const HomogeneousPoint& t, const SingularityPolicy& policy = {});

/// Cesaro kernel K_n^delta with the difference weights A_{n-k}^{delta-1} / A_n^delta
/// precomputed; evaluation is O(n) per point.
class CesaroKernel {
public:
  CesaroKernel(int n, CesaroOrder order, SingularityPolicy policy = {});

  int n() const { return n_; }
  const CesaroOrder& order() const { return order_; }

  double operator()(const HomogeneousPoint& t) const;

  /// Weight of D_k in the kernel, k = 0..n.
  const std::vector<double>& weights() const { return weights_; }

private:
  int n_;
  CesaroOrder order_;
  SingularityPolicy policy_;
  std::vector<double> weights_;
};

double cesaro_kernel(int n, CesaroOrder order, const HomogeneousPoint& t,
                     const SingularityPolicy& policy = {});

/// |(1/A_n^delta) sum_k A_{n-k}^{delta-1} cos((2k+1) u)| for 0 < u < pi.
double cesaro_cos_sum(int n, CesaroOrder order, double u);

/// q_r(x) = 1 - 2 r cos x + r^2, for 0 <= r < 1.
double poisson_q(double r, double x);

/// Classical one-dimensional Poisson kernel (1 - r^2) / q_r(x).
double classical_poisson(double r, double x);

/// Number of rings K summed by poisson_series: the first K >= 1 with
/// 6 K r^K / (1 - r) < tol.
int poisson_series_terms(double r, double tol);

/// P_r(t) = sum_k r^k sum_{j in J_k} phi_j(t), truncated by poisson_series_terms.
double poisson_series(double r, const HomogeneousPoint& t, double tol = 1e-10);

/// Rational-trigonometric closed form of P_r in terms of q_r(2 pi (ti - tj) / 3).
double poisson_compact(double r, const HomogeneousPoint& t);

/// Three-term majorant Q_r(t) = sum over pairs of 2 (1-r)^2 / (q_r q_r).
double poisson_majorant(double r, const HomogeneousPoint& t);

}  // namespace hexfs
