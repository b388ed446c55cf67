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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hexfs/means.hpp"

using namespace hexfs;

namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;

double binom_oracle(int n, double delta) {
  return std::exp(std::lgamma(n + delta + 1.0) - std::lgamma(n + 1.0) - std::lgamma(delta + 1.0));
}

// Plain node loop: (1/(3N^2)) sum f(t) conj(phi_j(t)), with phi written out by hand.
cplx coeff_oracle(const GridFunction& g, int j1, int j2) {
  const auto& grid = g.grid();
  const double a = 2 * j1 + j2, b = j1 + 2 * j2;
  cplx s{};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& t = grid.node(i);
    s += g.values()[i] * std::polar(1.0, -2.0 * kPi / 3.0 * (a * t.t1() + b * t.t2()));
  }
  return s / static_cast<double>(grid.size());
}

HomogeneousPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return HomogeneousPoint{u(rng), u(rng)};
}

double f2(const HomogeneousPoint& t) {
  const double c = 2.0 * kPi / 3.0;
  return std::exp(std::cos(c * (t.t1() - t.t2())) + std::cos(c * (t.t2() - t.t3())) +
                  std::cos(c * (t.t3() - t.t1())));
}

CoefficientTable table_of(const PointFunction& f, int N, int n_max) {
  return compute_coefficients(sample(f, build_grid(N)), n_max);
}

}  // namespace

TEST_CASE("compute_coefficients agrees with a direct node loop") {
  const auto g = sample([](const HomogeneousPoint& t) { return cplx{f2(t), std::sin(t.t1())}; }, build_grid(12));
  const auto c = compute_coefficients(g, 6);
  for (const auto& j : c.indices()) {
    CHECK(std::abs(c.at(j) - coeff_oracle(g, j.j1(), j.j2())) < 1e-13);
  }
  CHECK_THROWS_AS(compute_coefficients(g, -1), std::invalid_argument);
}

TEST_CASE("coefficients of a single character") {
  const HexIndex j{2, -3};
  const auto c = table_of([&](const HomogeneousPoint& t) { return phi(j, t); }, 8, 5);
  for (const auto& k : c.indices()) CHECK(std::abs(c.at(k) - (k == j ? 1.0 : 0.0)) < 1e-13);
  CHECK(c.ring_max(3) == doctest::Approx(1.0));
  CHECK(c.ring_max(2) < 1e-13);
}

TEST_CASE("real samples give conjugate-symmetric coefficients") {
  const auto c = table_of([](const HomogeneousPoint& t) { return cplx{f2(t)}; }, 16, 10);
  CHECK(c.conjugate_symmetric());
  const auto d = table_of([](const HomogeneousPoint& t) { return cplx{0.0, f2(t)}; }, 16, 10);
  CHECK_FALSE(d.conjugate_symmetric());
}

TEST_CASE("cesaro_multiplier examples") {
  CHECK(cesaro_multiplier(2, CesaroOrder(1.0), 1) == doctest::Approx(2.0 / 3.0));
  CHECK(cesaro_multiplier(5, CesaroOrder(0.5), 0) == 1.0);
  CHECK(cesaro_multiplier(5, CesaroOrder(0.5), 5) == doctest::Approx(1.0 / binom_oracle(5, 0.5)));
  CHECK_THROWS_AS(cesaro_multiplier(3, CesaroOrder(1.0), 4), std::invalid_argument);
  CHECK_THROWS_AS(cesaro_multiplier(3, CesaroOrder(1.0), -1), std::invalid_argument);
}

TEST_CASE("cesaro multipliers match the gamma form and decrease in k") {
  for (double delta : {0.25, 0.5, 1.0, 2.0, 3.5}) {
    for (int n : {0, 1, 7, 40}) {
      const auto m = cesaro_multipliers(n, CesaroOrder(delta));
      REQUIRE(m.size() == static_cast<std::size_t>(n + 1));
      for (int k = 0; k <= n; ++k) {
        CHECK(m[k] == doctest::Approx(binom_oracle(n - k, delta) / binom_oracle(n, delta)).epsilon(1e-12));
        CHECK(m[k] > 0.0);
        CHECK(m[k] <= 1.0);
        if (k > 0) CHECK(m[k] < m[k - 1]);
      }
    }
  }
}

TEST_CASE("poisson_multipliers examples") {
  const auto m = poisson_multipliers(0.5, 3);
  REQUIRE(m.size() == 4);
  CHECK(m[0] == 1.0);
  CHECK(m[3] == doctest::Approx(0.125));
  CHECK(poisson_multipliers(0.0, 2)[1] == 0.0);
}

TEST_CASE("characters are eigenfunctions of every mean") {
  const int n = 6;
  std::mt19937_64 rng(71);
  for (const auto& j : IndexSet(n + 2)) {
    const auto c = table_of([&](const HomogeneousPoint& t) { return phi(j, t); }, n + 3, n + 2);
    const int d = degree(j);
    for (int i = 0; i < 3; ++i) {
      const auto t = random_point(rng);
      const cplx p = phi(j, t);
      CHECK(std::abs(partial_sum(c, n, t) - (d <= n ? p : cplx{})) < 1e-12);
      const double m = d <= n ? binom_oracle(n - d, 0.5) / binom_oracle(n, 0.5) : 0.0;
      CHECK(std::abs(cesaro_mean(c, n, CesaroOrder(0.5), t) - m * p) < 1e-12);
      CHECK(std::abs(abel_poisson(c, 0.6, t, 1e-15) - std::pow(0.6, d) * p) < 1e-12);
    }
  }
}

TEST_CASE("partial sums reproduce random trigonometric polynomials") {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::pair<HexIndex, cplx>> terms;
  for (const auto& j : IndexSet(3)) terms.push_back({j, {u(rng), u(rng)}});
  auto poly = [&](const HomogeneousPoint& t) {
    cplx s{};
    for (const auto& [j, a] : terms) s += a * phi(j, t);
    return s;
  };
  const auto c = table_of(poly, 8, 5);
  for (int i = 0; i < 30; ++i) {
    const auto t = random_point(rng);
    for (int n : {3, 4, 5}) CHECK(std::abs(partial_sum(c, n, t) - poly(t)) < 1e-12);
  }
  CHECK_THROWS_AS(partial_sum(c, 6, HomogeneousPoint{}), std::invalid_argument);
}

TEST_CASE("spectral means agree with convolution against the kernels") {
  const auto grid = build_grid(32);
  const auto g = sample([](const HomogeneousPoint& t) { return cplx{f2(t)}; }, grid);
  const auto c = compute_coefficients(g, 12);
  std::mt19937_64 rng(79);
  for (int i = 0; i < 10; ++i) {
    const auto t = random_point(rng);
    for (int n : {0, 3, 8, 12}) {
      CHECK(std::abs(partial_sum(c, n, t) - partial_sum_conv(g, n, t)) < 1e-8);
      for (double delta : {0.5, 1.0, 2.0}) {
        CHECK(std::abs(cesaro_mean(c, n, CesaroOrder(delta), t) - cesaro_mean_conv(g, n, CesaroOrder(delta), t)) <
              1e-8);
      }
    }
  }
  // Poisson: spectral side converges to the closed-form convolution as the table grows
  const auto g64 = sample([](const HomogeneousPoint& t) { return cplx{f2(t)}; }, build_grid(64));
  const auto c64 = compute_coefficients(g64, 60);
  for (double r : {0.3, 0.6}) {
    const auto t = random_point(rng);
    CHECK(std::abs(abel_poisson(c64, r, t, 1e-14) - abel_poisson_conv(g64, r, t)) < 1e-8);
  }
}

TEST_CASE("means are linear and map real samples to real values") {
  std::mt19937_64 rng(83);
  const auto a = table_of([](const HomogeneousPoint& t) { return cplx{f2(t)}; }, 24, 10);
  const auto b = table_of([](const HomogeneousPoint& t) { return cplx{hex_distance_to_lattice(t)}; }, 24, 10);
  const auto ab = table_of(
      [](const HomogeneousPoint& t) { return cplx{2.0 * f2(t) - 3.0 * hex_distance_to_lattice(t)}; }, 24, 10);
  for (int i = 0; i < 10; ++i) {
    const auto t = random_point(rng);
    const CesaroOrder order(0.75);
    CHECK(std::abs(cesaro_mean(ab, 9, order, t) - (2.0 * cesaro_mean(a, 9, order, t) - 3.0 * cesaro_mean(b, 9, order, t))) <
          1e-11);
    CHECK(std::abs(abel_poisson(ab, 0.4, t) - (2.0 * abel_poisson(a, 0.4, t) - 3.0 * abel_poisson(b, 0.4, t))) < 1e-9);
    CHECK(std::abs(cesaro_mean(b, 10, order, t).imag()) < 1e-12);
    CHECK(std::abs(abel_poisson(b, 0.8, t).imag()) < 1e-12);
    CHECK(std::abs(partial_sum(a, 10, t).imag()) < 1e-12);
  }
}

TEST_CASE("evaluate_on_grid matches pointwise evaluation") {
  const auto c = table_of([](const HomogeneousPoint& t) { return cplx{f2(t), hex_norm(t)}; }, 20, 9);
  const auto mult = cesaro_multipliers(9, CesaroOrder(1.5));
  const auto grid = build_grid(7);
  const auto v = evaluate_on_grid(c, mult, grid);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    CHECK(std::abs(v.values()[i] - apply_ring_multipliers(c, mult, grid->node(i))) < 1e-12);
  }
}

TEST_CASE("ulyanov_identity_check sides agree for delta >= 1") {
  const auto c = table_of([](const HomogeneousPoint& t) { return cplx{hex_distance_to_lattice(t)}; }, 32, 16);
  std::mt19937_64 rng(89);
  for (double delta : {1.0, 1.5, 2.0, 3.25}) {
    for (int n : {0, 1, 4, 16}) {
      const auto t = random_point(rng);
      const auto [lhs, rhs] = ulyanov_identity_check(c, n, delta, t);
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
  }
  // delta = 1: only the k = n term survives and both sides are S_n^1
  const auto t = HomogeneousPoint{0.2, -0.45};
  const auto [lhs, rhs] = ulyanov_identity_check(c, 7, 1.0, t);
  CHECK(std::abs(lhs - cesaro_mean(c, 7, CesaroOrder(1.0), t)) < 1e-14);
  CHECK(std::abs(rhs - lhs) < 1e-13);
  CHECK_THROWS_AS(ulyanov_identity_check(c, 3, 0.5, t), std::invalid_argument);
}

TEST_CASE("abel_poisson rejects r outside [0, 1)") {
  const auto c = table_of([](const HomogeneousPoint&) { return cplx{1.0}; }, 4, 2);
  CHECK_THROWS_AS(abel_poisson(c, 1.0, HomogeneousPoint{}), std::domain_error);
  CHECK_THROWS_AS(abel_poisson(c, -0.1, HomogeneousPoint{}), std::domain_error);
  CHECK(abel_poisson(c, 0.0, HomogeneousPoint{0.3, 0.3}) == cplx{1.0});
}

TEST_CASE("truncation rule and tail estimate") {
  const auto c = table_of([](const HomogeneousPoint& t) { return cplx{f2(t)}; }, 64, 40);
  CHECK(abel_poisson_tail(c, 0.5, 40) == 0.0);
  for (double r : {0.2, 0.5, 0.9}) {
    const int K = abel_poisson_truncation(c, r, 1e-10);
    CHECK(K >= 0);
    CHECK(K <= 40);
    if (K < 40) CHECK(abel_poisson_tail(c, r, K) < 1e-10);
    if (K > 0) CHECK(abel_poisson_tail(c, r, K - 1) >= 1e-10);
    // tail oracle
    double rm = 0.0, w = 0.0;
    for (int k = K + 1; k <= 40; ++k) {
      rm = std::max(rm, c.ring_max(k));
      w += 6.0 * k * std::pow(r, k);
    }
    CHECK(abel_poisson_tail(c, r, K) == doctest::Approx(rm * w).epsilon(1e-12));
  }
  // a sparse table with a lone high ring must not stop before it
  CoefficientTable sparse(12);
  sparse.set(HexIndex{0, 0}, 1.0);
  sparse.set(HexIndex{12, 0}, 1.0);
  CHECK(abel_poisson_truncation(sparse, 0.5, 1e-10) == 12);
  CHECK(abel_poisson_truncation(c, 0.0, 1e-10) == 0);
}
