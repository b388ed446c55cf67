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
#include <limits>
#include <random>
#include <stdexcept>

#include "hexfs/hexcoord.hpp"

using namespace hexfs;

namespace {

const double kSqrt3 = std::sqrt(3.0);

bool close(const HomogeneousPoint& a, const HomogeneousPoint& b, double tol) {
  return std::abs(a.t1() - b.t1()) <= tol && std::abs(a.t2() - b.t2()) <= tol &&
         std::abs(a.t3() - b.t3()) <= tol;
}

// Literal half-open membership test, written independently of the library.
bool omega_oracle(double t1, double t2, double t3) {
  return -1.0 <= t1 && t1 < 1.0 && -1.0 <= t2 && t2 < 1.0 && -1.0 <= -t3 && -t3 < 1.0;
}

// Brute force: the translate t - s (s in the lattice, small coefficients) lying in Omega.
HomogeneousPoint fold_oracle(const HomogeneousPoint& t) {
  for (int p = -60; p <= 60; ++p) {
    for (int q = -60; q <= 60; ++q) {
      const double s1 = p + 2.0 * q, s2 = p - 1.0 * q;
      const double u1 = t.t1() - s1, u2 = t.t2() - s2;
      if (omega_oracle(u1, u2, -u1 - u2)) return HomogeneousPoint{u1, u2};
    }
  }
  throw std::logic_error("fold_oracle: no translate found");
}

// min over lattice vectors with components in [-6, 6] of max |t_i - s_i|
double distance_oracle(const HomogeneousPoint& t) {
  double best = std::numeric_limits<double>::infinity();
  for (int s1 = -6; s1 <= 6; ++s1) {
    for (int s2 = -6; s2 <= 6; ++s2) {
      const int s3 = -s1 - s2;
      if (s3 < -6 || s3 > 6) continue;
      if (((s1 - s2) % 3 + 3) % 3 != 0) continue;
      const double d = std::max({std::abs(t.t1() - s1), std::abs(t.t2() - s2), std::abs(t.t3() - s3)});
      best = std::min(best, d);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("third coordinate is derived from the first two") {
  const HomogeneousPoint t{0.25, -0.75};
  CHECK(t.t3() == doctest::Approx(0.5));
  CHECK(t.t1() + t.t2() + t.t3() == 0.0);
  const auto r = t.rotated();
  CHECK(r.t1() == t.t2());
  CHECK(r.t2() == t.t3());
  CHECK(r.t3() == doctest::Approx(t.t1()));
}

TEST_CASE("from_triple validates the zero-sum constraint") {
  CHECK_NOTHROW(HomogeneousPoint::from_triple(1.0, -0.5, -0.5));
  CHECK_NOTHROW(HomogeneousPoint::from_triple(0.1, 0.2, -0.3));
  CHECK_THROWS_AS(HomogeneousPoint::from_triple(1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(HomogeneousPoint::from_triple(0.1, 0.1, -0.2 + 1e-6), std::invalid_argument);
}

TEST_CASE("from_plane examples") {
  CHECK(close(from_plane({0.0, 0.0}), HomogeneousPoint{0.0, 0.0}, 1e-15));
  CHECK(close(from_plane({2.0 / kSqrt3, 0.0}), HomogeneousPoint::from_triple(1.0, 0.0, -1.0), 1e-14));
  CHECK(close(from_plane({0.0, 1.0}), HomogeneousPoint::from_triple(-0.5, 1.0, -0.5), 1e-14));
}

TEST_CASE("to_plane examples") {
  const auto a = to_plane(HomogeneousPoint{0.0, 0.0});
  CHECK(a.x1 == 0.0);
  CHECK(a.x2 == 0.0);
  const auto b = to_plane(HomogeneousPoint::from_triple(1.0, 0.0, -1.0));
  CHECK(b.x1 == doctest::Approx(2.0 / kSqrt3).epsilon(1e-14));
  CHECK(b.x2 == doctest::Approx(0.0));
  const auto c = to_plane(HomogeneousPoint::from_triple(-0.5, 1.0, -0.5));
  CHECK(std::abs(c.x1) < 1e-15);
  CHECK(c.x2 == doctest::Approx(1.0));
}

TEST_CASE("plane transforms are mutually inverse on a random 10x10 grid") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const PlanePoint x{-2.0 + 0.4 * i + jitter(rng), -2.0 + 0.4 * j + jitter(rng)};
      const PlanePoint y = to_plane(from_plane(x));
      CHECK(std::abs(y.x1 - x.x1) < 1e-12);
      CHECK(std::abs(y.x2 - x.x2) < 1e-12);
      const HomogeneousPoint t{x.x1, x.x2};
      CHECK(close(from_plane(to_plane(t)), t, 1e-12));
    }
  }
}

TEST_CASE("hex_norm examples and norm axioms") {
  CHECK(hex_norm(HomogeneousPoint{0.0, 0.0}) == 0.0);
  CHECK(hex_norm(HomogeneousPoint::from_triple(1.0, -0.5, -0.5)) == 1.0);
  CHECK(hex_norm(HomogeneousPoint::from_triple(0.2, 0.1, -0.3)) == doctest::Approx(0.3));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 500; ++i) {
    const HomogeneousPoint a{u(rng), u(rng)}, b{u(rng), u(rng)};
    const double lambda = u(rng);
    CHECK(hex_norm(a + b) <= hex_norm(a) + hex_norm(b) + 1e-12);
    CHECK(hex_norm(a * lambda) == doctest::Approx(std::abs(lambda) * hex_norm(a)).epsilon(1e-12));
  }
}

TEST_CASE("in_omega uses the half-open convention") {
  CHECK(in_omega(HomogeneousPoint{0.0, 0.0}));
  CHECK_FALSE(in_omega(HomogeneousPoint::from_triple(1.0, 0.0, -1.0)));
  CHECK(in_omega(HomogeneousPoint::from_triple(-1.0, 0.0, 1.0)));
  CHECK_FALSE(in_omega(HomogeneousPoint::from_triple(0.0, 1.0, -1.0)));
  CHECK(in_omega(HomogeneousPoint::from_triple(0.0, -1.0, 1.0)));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 2000; ++i) {
    const HomogeneousPoint t{u(rng), u(rng)};
    CHECK(in_omega(t) == omega_oracle(t.t1(), t.t2(), t.t3()));
  }
}

TEST_CASE("in_lattice recognizes the translation lattice") {
  CHECK(in_lattice(HomogeneousPoint{0.0, 0.0}));
  CHECK(in_lattice(HomogeneousPoint::from_triple(1.0, 1.0, -2.0)));
  CHECK(in_lattice(HomogeneousPoint::from_triple(2.0, -1.0, -1.0)));
  CHECK(in_lattice(HomogeneousPoint::from_triple(3.0, 0.0, -3.0)));
  CHECK_FALSE(in_lattice(HomogeneousPoint::from_triple(1.0, 0.0, -1.0)));
  CHECK_FALSE(in_lattice(HomogeneousPoint::from_triple(0.5, 0.5, -1.0)));
}

TEST_CASE("fold_to_omega examples") {
  const auto base = HomogeneousPoint::from_triple(0.2, 0.1, -0.3);
  CHECK(close(fold_to_omega(base), base, 1e-15));
  CHECK(close(fold_to_omega(HomogeneousPoint::from_triple(3.2, 0.1, -3.3)), base, 1e-12));
  CHECK(close(fold_to_omega(HomogeneousPoint::from_triple(1.2, 1.1, -2.3)), base, 1e-12));
  CHECK(close(fold_oracle(HomogeneousPoint::from_triple(1.2, 1.1, -2.3)), base, 1e-12));
}

TEST_CASE("fold_to_omega agrees with a brute-force lattice search") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int i = 0; i < 300; ++i) {
    const HomogeneousPoint t{u(rng), u(rng)};
    const auto f = fold_to_omega(t);
    CHECK(in_omega(f));
    CHECK(close(f, fold_oracle(t), 1e-10));
    CHECK(in_lattice(t - f));
  }
}

TEST_CASE("fold_to_omega is idempotent and lattice invariant") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  std::uniform_int_distribution<int> m(-30, 30);
  for (int i = 0; i < 1000; ++i) {
    const HomogeneousPoint t{u(rng), u(rng)};
    const auto f = fold_to_omega(t);
    CHECK(in_omega(f));
    CHECK(close(fold_to_omega(f), f, 0.0));
    const int p = m(rng), q = m(rng);
    const HomogeneousPoint s{p + 2.0 * q, p - 1.0 * q};
    CHECK(close(fold_to_omega(t + s), f, 1e-10));
  }
}

TEST_CASE("fold_to_omega resolves boundary points by the half-open rule") {
  // (1, 0, -1) is excluded; its representative must be the included corner (-1, ... )
  const auto f = fold_to_omega(HomogeneousPoint::from_triple(1.0, 0.0, -1.0));
  CHECK(in_omega(f));
  CHECK(in_lattice(HomogeneousPoint::from_triple(1.0, 0.0, -1.0) - f));
  const auto g = fold_to_omega(HomogeneousPoint::from_triple(0.0, 1.0, -1.0));
  CHECK(in_omega(g));
  const auto h = fold_to_omega(HomogeneousPoint::from_triple(0.5, 0.5, -1.0));
  CHECK(in_omega(h));
  CHECK(in_lattice(HomogeneousPoint::from_triple(0.5, 0.5, -1.0) - h));
}

TEST_CASE("hex_distance_to_lattice examples") {
  CHECK(hex_distance_to_lattice(HomogeneousPoint{0.0, 0.0}) == 0.0);
  CHECK(hex_distance_to_lattice(HomogeneousPoint::from_triple(1.0, 1.0, -2.0)) == doctest::Approx(0.0));
  const double d = hex_distance_to_lattice(HomogeneousPoint::from_triple(0.2, 0.1, -0.3));
  CHECK(d > 0.0);
  CHECK(d <= 0.3 + 1e-15);
  CHECK(d == doctest::Approx(distance_oracle(HomogeneousPoint::from_triple(0.2, 0.1, -0.3))));
}

TEST_CASE("hex_distance_to_lattice agrees with brute force") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 500; ++i) {
    const HomogeneousPoint t{u(rng), u(rng)};
    CHECK(hex_distance_to_lattice(t) == doctest::Approx(distance_oracle(t)).epsilon(1e-12));
  }
}
