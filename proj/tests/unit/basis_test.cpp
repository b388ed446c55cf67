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

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "hexfs/basis.hpp"

using namespace hexfs;

namespace {

std::size_t double_loop_count(int n) {
  std::size_t c = 0;
  for (int a = -n; a <= n; ++a) {
    for (int b = -n; b <= n; ++b) {
      if (std::abs(a + b) <= n) ++c;
    }
  }
  return c;
}

std::set<std::pair<int, int>> as_set(const std::vector<HexIndex>& v) {
  std::set<std::pair<int, int>> s;
  for (const auto& j : v) s.insert({j.j1(), j.j2()});
  return s;
}

}  // namespace

TEST_CASE("HexIndex::from_triple validates the zero-sum constraint") {
  CHECK(HexIndex::from_triple(2, -1, -1) == HexIndex{2, -1});
  CHECK_THROWS_AS(HexIndex::from_triple(1, 1, 1), std::invalid_argument);
}

TEST_CASE("degree examples") {
  CHECK(degree(HexIndex{0, 0}) == 0);
  CHECK(degree(HexIndex::from_triple(1, 0, -1)) == 1);
  CHECK(degree(HexIndex::from_triple(2, -1, -1)) == 2);
  CHECK(degree(HexIndex::from_triple(-3, 1, 2)) == 3);
}

TEST_CASE("enumerate_hn examples") {
  const auto h0 = enumerate_hn(0);
  REQUIRE(h0.size() == 1);
  CHECK(h0[0] == HexIndex{0, 0});
  CHECK(enumerate_hn(1).size() == 7);
  CHECK(enumerate_hn(4).size() == 61);
  CHECK_THROWS_AS(enumerate_hn(-1), std::invalid_argument);
}

TEST_CASE("|H_n| matches an independent double-loop count") {
  for (int n = 0; n <= 32; ++n) {
    CHECK(enumerate_hn(n).size() == double_loop_count(n));
    CHECK(IndexSet::cardinality(n) == double_loop_count(n));
  }
}

TEST_CASE("H_n is ordered lexicographically and positions are consistent") {
  const IndexSet h(6);
  CHECK(std::is_sorted(h.begin(), h.end()));
  CHECK(std::adjacent_find(h.begin(), h.end()) == h.end());
  for (std::size_t i = 0; i < h.size(); ++i) CHECK(h.position(h[i]) == i);
}

TEST_CASE("H_n is closed under negation and rotation") {
  for (int n : {1, 3, 7}) {
    const IndexSet h(n);
    for (const auto& j : h) {
      CHECK(h.contains(-j));
      CHECK(h.contains(j.rotated()));
      CHECK(degree(j) <= n);
    }
    CHECK_FALSE(h.contains(HexIndex{n + 1, 0}));
  }
}

TEST_CASE("ring examples") {
  const auto r0 = ring_jk(0);
  REQUIRE(r0.size() == 1);
  CHECK(r0[0] == HexIndex{0, 0});
  CHECK(ring_jk(1).size() == 6);
  CHECK(ring_jk(3).size() == 18);
  for (int k = 1; k <= 10; ++k) CHECK(ring_jk(k).size() == static_cast<std::size_t>(6 * k));
}

TEST_CASE("rings partition H_n without duplicates") {
  for (int n = 0; n <= 9; ++n) {
    std::vector<HexIndex> all;
    for (int k = 0; k <= n; ++k) {
      const auto ring = ring_jk(k);
      CHECK(std::is_sorted(ring.begin(), ring.end()));
      for (const auto& j : ring) CHECK(degree(j) == k);
      all.insert(all.end(), ring.begin(), ring.end());
    }
    CHECK(all.size() == as_set(all).size());
    CHECK(as_set(all) == as_set(enumerate_hn(n).members()));
  }
}

TEST_CASE("for_each_in_ring visits the ring in order") {
  for (int k = 0; k <= 6; ++k) {
    std::vector<HexIndex> seen;
    for_each_in_ring(k, [&](const HexIndex& j) { seen.push_back(j); });
    CHECK(seen == ring_jk(k));
  }
}

TEST_CASE("phi examples") {
  const double pi = std::numbers::pi;
  const auto j = HexIndex::from_triple(1, 0, -1);
  CHECK(std::abs(phi(HexIndex{3, -5}, HomogeneousPoint{}) - 1.0) < 1e-15);
  CHECK(std::abs(phi(j, HomogeneousPoint::from_triple(1.0, 0.0, -1.0)) - std::polar(1.0, 4.0 * pi / 3.0)) <
        1e-14);
  CHECK(std::abs(phi(j, HomogeneousPoint::from_triple(1.5, 0.0, -1.5)) - 1.0) < 1e-14);
  CHECK(pairing(j, HomogeneousPoint::from_triple(1.0, 0.0, -1.0)) == doctest::Approx(2.0));
}

TEST_CASE("phi has unit modulus and is lattice periodic") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_int_distribution<int> m(-5, 5);
  const IndexSet h(5);
  for (int i = 0; i < 100; ++i) {
    const HomogeneousPoint t{u(rng), u(rng)};
    const int p = m(rng), q = m(rng);
    const HomogeneousPoint s{p + 2.0 * q, p - 1.0 * q};
    for (const auto& j : h) {
      CHECK(std::abs(std::abs(phi(j, t)) - 1.0) < 1e-12);
      CHECK(std::abs(phi(j, t + s) - phi(j, t)) < 1e-10);
    }
  }
}

TEST_CASE("CharacterTable matches phi") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int rep = 0; rep < 10; ++rep) {
    const HomogeneousPoint t{u(rng), u(rng)};
    const CharacterTable table(6, t);
    for (const auto& j : IndexSet(6)) CHECK(std::abs(table(j) - phi(j, t)) < 1e-13);
  }
}
