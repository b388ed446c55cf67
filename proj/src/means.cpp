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

#include "hexfs/means.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hexfs {

namespace {

void require_order(int n, int n_max, const char* who) {
  if (n < 0 || n > n_max) {
    throw std::invalid_argument(std::string(who) + ": n = " + std::to_string(n) +
                                " outside [0, " + std::to_string(n_max) + "]");
  }
}

// dst[s] += v * root^(start + s * step) for s = 0..count-1, exponents mod period.
void accumulate_geometric(std::complex<double>* dst, std::size_t count, std::complex<double> v,
                          const std::vector<std::complex<double>>& roots, long long start,
                          long long step) {
  const long long period = static_cast<long long>(roots.size());
  long long idx = start % period;
  if (idx < 0) idx += period;
  long long inc = step % period;
  if (inc < 0) inc += period;
  for (std::size_t s = 0; s < count; ++s) {
    dst[s] += v * roots[static_cast<std::size_t>(idx)];
    idx += inc;
    if (idx >= period) idx -= period;
  }
}

template <class Kernel>
std::complex<double> lattice_convolution(const GridFunction& f, const HomogeneousPoint& t,
                                         Kernel&& kernel) {
  const HexGrid& grid = f.grid();
  std::vector<std::complex<double>> terms(grid.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    terms[i] = f.values()[i] * kernel(t - grid.node(i));
  }
  return pairwise_sum(terms) / static_cast<double>(terms.size());
}

}  // namespace

CoefficientTable::CoefficientTable(int n_max)
    : indices_{n_max}, values_(indices_.size(), std::complex<double>{}) {}

double CoefficientTable::ring_max(int k) const {
  if (k < 0 || k > n_max()) return 0.0;
  double m = 0.0;
  for_each_in_ring(k, [&](const HexIndex& j) { m = std::max(m, std::abs(at(j))); });
  return m;
}

bool CoefficientTable::conjugate_symmetric(double tol) const {
  for (const HexIndex& j : indices_) {
    if (std::abs(at(-j) - std::conj(at(j))) > tol) return false;
  }
  return true;
}

CoefficientTable compute_coefficients(const GridFunction& g, int n_max) {
  if (n_max < 0) throw std::invalid_argument("compute_coefficients: n_max must be nonnegative");
  const HexGrid& grid = g.grid();
  const int N = grid.refinement();
  const int bmax = 2 * n_max;
  const std::size_t width = 2 * static_cast<std::size_t>(bmax) + 1;

  // rows[k1 + N][b + bmax] = sum_{k2} g(k1, k2) omega^{-b k2}
  std::vector<std::complex<double>> rows(2 * static_cast<std::size_t>(N) * width);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const int k1 = grid.k1(i);
    const int k2 = grid.k2(i);
    const std::complex<double> v = g.values()[i];
    std::complex<double>* row = &rows[static_cast<std::size_t>(k1 + N) * width];
    accumulate_geometric(row, width, v, grid.unit_roots(), static_cast<long long>(bmax) * k2, -k2);
  }

  CoefficientTable table(n_max);
  const double inv = 1.0 / static_cast<double>(grid.size());
  const auto& roots = grid.unit_roots();
  const long long period = static_cast<long long>(roots.size());
  for (const HexIndex& j : table.indices()) {
    const auto [a, b] = frequency_pair(j);
    long long idx = (static_cast<long long>(a) * N) % period;
    if (idx < 0) idx += period;
    const long long inc = ((-a) % period + period) % period;
    std::complex<double> s{};
    for (int k1 = -N; k1 < N; ++k1) {
      s += roots[static_cast<std::size_t>(idx)] *
           rows[static_cast<std::size_t>(k1 + N) * width + (b + bmax)];
      idx += inc;
      if (idx >= period) idx -= period;
    }
    table.set(j, s * inv);
  }
  return table;
}

std::complex<double> apply_ring_multipliers(const CoefficientTable& coeffs,
                                            std::span<const double> multipliers,
                                            const HomogeneousPoint& t) {
  if (multipliers.empty()) return {};
  const int K = static_cast<int>(multipliers.size()) - 1;
  require_order(K, coeffs.n_max(), "apply_ring_multipliers");
  const CharacterTable chars(K, t);
  std::complex<double> sum{};
  for (int k = 0; k <= K; ++k) {
    if (multipliers[k] == 0.0) continue;
    std::complex<double> ring{};
    for_each_in_ring(k, [&](const HexIndex& j) { ring += coeffs.at(j) * chars(j); });
    sum += multipliers[k] * ring;
  }
  return sum;
}

GridFunction evaluate_on_grid(const CoefficientTable& coeffs, std::span<const double> multipliers,
                              std::shared_ptr<const HexGrid> grid_ptr) {
  const HexGrid& grid = *grid_ptr;
  std::vector<std::complex<double>> values(grid.size());
  if (multipliers.empty()) return GridFunction{std::move(grid_ptr), std::move(values)};
  const int K = static_cast<int>(multipliers.size()) - 1;
  require_order(K, coeffs.n_max(), "evaluate_on_grid");
  const int N = grid.refinement();
  const int amax = 2 * K;
  const std::size_t cols = 2 * static_cast<std::size_t>(N);

  // partial[a + amax][k2 + N] = sum_b m c_(a,b) omega^{b k2}
  std::vector<std::complex<double>> partial((2 * static_cast<std::size_t>(amax) + 1) * cols);
  const IndexSet sub(K);
  for (const HexIndex& j : sub) {
    const std::complex<double> c = multipliers[degree(j)] * coeffs.at(j);
    if (c == std::complex<double>{}) continue;
    const auto [a, b] = frequency_pair(j);
    std::complex<double>* row = &partial[static_cast<std::size_t>(a + amax) * cols];
    accumulate_geometric(row, cols, c, grid.unit_roots(), -static_cast<long long>(b) * N, b);
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const int k1 = grid.k1(i);
    const std::size_t col = static_cast<std::size_t>(grid.k2(i) + N);
    const auto& roots = grid.unit_roots();
    const long long period = static_cast<long long>(roots.size());
    long long idx = (-static_cast<long long>(amax) * k1) % period;
    if (idx < 0) idx += period;
    const long long inc = (k1 % period + period) % period;
    std::complex<double> s{};
    for (int a = -amax; a <= amax; ++a) {
      s += roots[static_cast<std::size_t>(idx)] *
           partial[static_cast<std::size_t>(a + amax) * cols + col];
      idx += inc;
      if (idx >= period) idx -= period;
    }
    values[i] = s;
  }
  return GridFunction{std::move(grid_ptr), std::move(values)};
}

std::complex<double> partial_sum(const CoefficientTable& coeffs, int n, const HomogeneousPoint& t) {
  require_order(n, coeffs.n_max(), "partial_sum");
  const std::vector<double> ones(static_cast<std::size_t>(n) + 1, 1.0);
  return apply_ring_multipliers(coeffs, ones, t);
}

std::complex<double> partial_sum_conv(const GridFunction& f, int n, const HomogeneousPoint& t) {
  if (n < 0) throw std::invalid_argument("partial_sum_conv: n must be nonnegative");
  return lattice_convolution(f, t, [n](const HomogeneousPoint& s) { return dirichlet(n, s); });
}

double cesaro_multiplier(int n, CesaroOrder order, int k) {
  if (n < 0) throw std::invalid_argument("cesaro_multiplier: n must be nonnegative");
  if (k < 0 || k > n) {
    throw std::invalid_argument("cesaro_multiplier: ring " + std::to_string(k) +
                                " outside [0, " + std::to_string(n) + "]");
  }
  return binom_a(n - k, order.delta()) / binom_a(n, order.delta());
}

std::vector<double> cesaro_multipliers(int n, CesaroOrder order) {
  if (n < 0) throw std::invalid_argument("cesaro_multipliers: n must be nonnegative");
  const std::vector<double> a = binom_a_table(n, order.delta());
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[k] = a[n - k] / a[n];
  return out;
}

std::complex<double> cesaro_mean(const CoefficientTable& coeffs, int n, CesaroOrder order,
                                 const HomogeneousPoint& t) {
  require_order(n, coeffs.n_max(), "cesaro_mean");
  return apply_ring_multipliers(coeffs, cesaro_multipliers(n, order), t);
}

std::complex<double> cesaro_mean_conv(const GridFunction& f, int n, CesaroOrder order,
                                      const HomogeneousPoint& t) {
  const CesaroKernel kernel(n, order);
  return lattice_convolution(f, t, kernel);
}

double abel_poisson_tail(const CoefficientTable& coeffs, double r, int K) {
  const int n_max = coeffs.n_max();
  if (K >= n_max) return 0.0;
  double m = 0.0;
  double weight = 0.0;
  double rk = std::pow(r, K + 1);
  for (int k = K + 1; k <= n_max; ++k, rk *= r) {
    m = std::max(m, coeffs.ring_max(k));
    weight += 6.0 * k * rk;
  }
  return m * weight;
}

int abel_poisson_truncation(const CoefficientTable& coeffs, double r, double tol) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::domain_error("abel_poisson: r must satisfy 0 <= r < 1, got " + std::to_string(r));
  }
  if (!(tol > 0.0)) throw std::invalid_argument("abel_poisson: tol must be positive");
  const int n_max = coeffs.n_max();
  // suffix[k] = max ring_max over rings k..n_max
  std::vector<double> suffix(static_cast<std::size_t>(n_max) + 2, 0.0);
  for (int k = n_max; k >= 0; --k) suffix[k] = std::max(suffix[k + 1], coeffs.ring_max(k));
  // weight = sum_{k > K} 6 k r^k over the table, updated downward from K = n_max
  std::vector<double> weight(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (int K = n_max - 1; K >= 0; --K) weight[K] = weight[K + 1] + 6.0 * (K + 1) * std::pow(r, K + 1);
  for (int K = 0; K < n_max; ++K) {
    if (suffix[K + 1] * weight[K] < tol) return K;
  }
  return n_max;
}

std::vector<double> poisson_multipliers(double r, int rings) {
  std::vector<double> out(static_cast<std::size_t>(std::max(rings, 0)) + 1);
  double rk = 1.0;
  for (auto& m : out) {
    m = rk;
    rk *= r;
  }
  return out;
}

std::complex<double> abel_poisson(const CoefficientTable& coeffs, double r,
                                  const HomogeneousPoint& t, double tol) {
  const int K = abel_poisson_truncation(coeffs, r, tol);
  return apply_ring_multipliers(coeffs, poisson_multipliers(r, K), t);
}

std::complex<double> abel_poisson_conv(const GridFunction& f, double r, const HomogeneousPoint& t) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::domain_error("abel_poisson_conv: r must satisfy 0 <= r < 1, got " +
                            std::to_string(r));
  }
  return lattice_convolution(f, t, [r](const HomogeneousPoint& s) { return poisson_compact(r, s); });
}

std::pair<std::complex<double>, std::complex<double>> ulyanov_identity_check(
    const CoefficientTable& coeffs, int n, double delta, const HomogeneousPoint& t) {
  if (!(delta >= 1.0)) {
    throw std::invalid_argument("ulyanov_identity_check: delta must be >= 1");
  }
  require_order(n, coeffs.n_max(), "ulyanov_identity_check");
  const CesaroOrder order(delta);
  const std::complex<double> lhs = cesaro_mean(coeffs, n, order, t);

  const std::vector<double> outer = binom_a_table(n, delta - 2.0);
  const CesaroOrder fejer(1.0);
  std::complex<double> rhs{};
  for (int k = 0; k <= n; ++k) {
    if (outer[n - k] == 0.0) continue;
    rhs += outer[n - k] * binom_a(k, 1.0) * cesaro_mean(coeffs, k, fejer, t);
  }
  rhs /= binom_a(n, delta);
  return {lhs, rhs};
}

}  // namespace hexfs
