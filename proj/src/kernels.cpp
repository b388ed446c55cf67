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

#include "hexfs/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hexfs {

namespace {

constexpr double kPi = std::numbers::pi;

void require_radius(double r, const char* who) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::domain_error(std::string(who) + ": r must satisfy 0 <= r < 1, got " +
                            std::to_string(r));
  }
}

struct PairAngles {
  double d12, d23, d31;
};

PairAngles pair_angles(const HomogeneousPoint& t) {
  return {(t.t1() - t.t2()) * kPi / 3.0, (t.t2() - t.t3()) * kPi / 3.0,
          (t.t3() - t.t1()) * kPi / 3.0};
}

double theta_closed(int n, const PairAngles& d, double s12, double s23, double s31) {
  const double m = n + 1.0;
  return (std::sin(m * d.d12) / s12) * (std::sin(m * d.d23) / s23) * (std::sin(m * d.d31) / s31);
}

}  // namespace

CesaroOrder::CesaroOrder(double delta) : delta_{delta} {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("CesaroOrder: delta must be positive, got " +
                                std::to_string(delta));
  }
}

void SingularityPolicy::validate() const {
  if (!(threshold > 0.0)) throw std::invalid_argument("SingularityPolicy: threshold must be > 0");
}

double binom_a(int n, double delta) {
  if (n < 0) throw std::invalid_argument("binom_a: n must be nonnegative");
  if (!(delta >= -1.0)) {
    throw std::invalid_argument("binom_a: delta must be >= -1, got " + std::to_string(delta));
  }
  double a = 1.0;
  for (int k = 1; k <= n; ++k) a *= (delta + k) / k;
  return a;
}

std::vector<double> binom_a_table(int n_max, double delta) {
  if (n_max < 0) return {};
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  out[0] = binom_a(0, delta);
  for (int k = 1; k <= n_max; ++k) out[k] = out[k - 1] * (delta + k) / k;
  return out;
}

std::vector<double> ring_sums(int n, const HomogeneousPoint& t) {
  if (n < 0) throw std::invalid_argument("ring_sums: n must be nonnegative");
  const CharacterTable chars(n, t);
  std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for_each_in_ring(k, [&](const HexIndex& j) { s += chars(j).real(); });
    out[k] = s;
  }
  return out;
}

std::vector<double> dirichlet_direct_all(int n, const HomogeneousPoint& t) {
  std::vector<double> d = ring_sums(n, t);
  for (std::size_t k = 1; k < d.size(); ++k) d[k] += d[k - 1];
  return d;
}

double dirichlet_direct(int n, const HomogeneousPoint& t) {
  if (n < 0) throw std::invalid_argument("dirichlet_direct: n must be nonnegative");
  return dirichlet_direct_all(n, t).back();
}

bool is_singular(const HomogeneousPoint& t, const SingularityPolicy& policy) {
  const PairAngles d = pair_angles(t);
  return std::abs(std::sin(d.d12)) < policy.threshold ||
         std::abs(std::sin(d.d23)) < policy.threshold ||
         std::abs(std::sin(d.d31)) < policy.threshold;
}

double theta(int n, const HomogeneousPoint& t, const SingularityPolicy& policy) {
  if (n < -1) throw std::invalid_argument("theta: n must be >= -1");
  if (n == -1) return 0.0;
  const PairAngles d = pair_angles(t);
  const double s12 = std::sin(d.d12), s23 = std::sin(d.d23), s31 = std::sin(d.d31);
  if (std::abs(s12) < policy.threshold || std::abs(s23) < policy.threshold ||
      std::abs(s31) < policy.threshold) {
    double sum = 0.0;
    for (double dk : dirichlet_direct_all(n, t)) sum += dk;
    return sum;
  }
  return theta_closed(n, d, s12, s23, s31);
}

double dirichlet(int n, const HomogeneousPoint& t, const SingularityPolicy& policy) {
  if (n < 0) throw std::invalid_argument("dirichlet: n must be nonnegative");
  if (is_singular(t, policy)) return dirichlet_direct(n, t);
  return theta(n, t, policy) - theta(n - 1, t, policy);
}

CesaroKernel::CesaroKernel(int n, CesaroOrder order, SingularityPolicy policy)
    : n_{n}, order_{order}, policy_{policy} {
  if (n < 0) throw std::invalid_argument("CesaroKernel: n must be nonnegative");
  policy_.validate();
  const std::vector<double> lower = binom_a_table(n, order.delta() - 1.0);
  const double norm = binom_a(n, order.delta());
  weights_.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) weights_[k] = lower[n - k] / norm;
}

double CesaroKernel::operator()(const HomogeneousPoint& t) const {
  const PairAngles d = pair_angles(t);
  const double s12 = std::sin(d.d12), s23 = std::sin(d.d23), s31 = std::sin(d.d31);
  if (std::abs(s12) < policy_.threshold || std::abs(s23) < policy_.threshold ||
      std::abs(s31) < policy_.threshold) {
    const std::vector<double> dk = dirichlet_direct_all(n_, t);
    double sum = 0.0;
    for (int k = 0; k <= n_; ++k) sum += weights_[k] * dk[k];
    return sum;
  }
  double sum = 0.0;
  double prev = 0.0;  // Theta_{-1}
  for (int k = 0; k <= n_; ++k) {
    const double cur = theta_closed(k, d, s12, s23, s31);
    sum += weights_[k] * (cur - prev);
    prev = cur;
  }
  return sum;
}

double cesaro_kernel(int n, CesaroOrder order, const HomogeneousPoint& t,
                     const SingularityPolicy& policy) {
  return CesaroKernel(n, order, policy)(t);
}

double cesaro_cos_sum(int n, CesaroOrder order, double u) {
  if (n < 0) throw std::invalid_argument("cesaro_cos_sum: n must be nonnegative");
  if (!(u > 0.0 && u < kPi)) throw std::invalid_argument("cesaro_cos_sum: u must lie in (0, pi)");
  const std::vector<double> lower = binom_a_table(n, order.delta() - 1.0);
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) sum += lower[n - k] * std::cos((2.0 * k + 1.0) * u);
  return std::abs(sum / binom_a(n, order.delta()));
}

double poisson_q(double r, double x) {
  require_radius(r, "poisson_q");
  return 1.0 - 2.0 * r * std::cos(x) + r * r;
}

double classical_poisson(double r, double x) {
  require_radius(r, "classical_poisson");
  return (1.0 - r * r) / poisson_q(r, x);
}

int poisson_series_terms(double r, double tol) {
  require_radius(r, "poisson_series_terms");
  if (!(tol > 0.0)) throw std::invalid_argument("poisson_series_terms: tol must be positive");
  int k = 1;
  double rk = r;
  while (!(6.0 * k * rk / (1.0 - r) < tol)) {
    ++k;
    rk *= r;
  }
  return k;
}

double poisson_series(double r, const HomogeneousPoint& t, double tol) {
  const int terms = poisson_series_terms(r, tol);
  const CharacterTable chars(terms, t);
  double sum = 0.0;
  double rk = 1.0;
  for (int k = 0; k <= terms; ++k) {
    double ring = 0.0;
    for_each_in_ring(k, [&](const HexIndex& j) { ring += chars(j).real(); });
    sum += rk * ring;
    rk *= r;
  }
  return sum;
}

double poisson_compact(double r, const HomogeneousPoint& t) {
  require_radius(r, "poisson_compact");
  const double c = 2.0 * kPi / 3.0;
  const double q12 = poisson_q(r, c * (t.t1() - t.t2()));
  const double q23 = poisson_q(r, c * (t.t2() - t.t3()));
  const double q31 = poisson_q(r, c * (t.t3() - t.t1()));
  const double s = 1.0 - r;
  const double head = s * s * s * (1.0 - r * r * r) / (q12 * q23 * q31);
  const double pairs = r * s * s * (1.0 / (q12 * q23) + 1.0 / (q23 * q31) + 1.0 / (q31 * q12));
  return head + pairs;
}

double poisson_majorant(double r, const HomogeneousPoint& t) {
  require_radius(r, "poisson_majorant");
  const double c = 2.0 * kPi / 3.0;
  const double q12 = poisson_q(r, c * (t.t1() - t.t2()));
  const double q23 = poisson_q(r, c * (t.t2() - t.t3()));
  const double q31 = poisson_q(r, c * (t.t3() - t.t1()));
  const double s2 = 2.0 * (1.0 - r) * (1.0 - r);
  return s2 / (q12 * q23) + s2 / (q23 * q31) + s2 / (q31 * q12);
}

}  // namespace hexfs
