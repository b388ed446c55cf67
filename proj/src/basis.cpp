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

#include "hexfs/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hexfs {

HexIndex HexIndex::from_triple(int j1, int j2, int j3) {
  if (j1 + j2 + j3 != 0) {
    throw std::invalid_argument("HexIndex: components must sum to zero, got (" +
                                std::to_string(j1) + "," + std::to_string(j2) + "," +
                                std::to_string(j3) + ")");
  }
  return {j1, j2};
}

int degree(const HexIndex& j) {
  return std::max({std::abs(j.j1()), std::abs(j.j2()), std::abs(j.j3())});
}

IndexSet::IndexSet(int n) : n_{n} {
  if (n < 0) throw std::invalid_argument("IndexSet: radius must be nonnegative");
  members_.reserve(cardinality(n));
  row_start_.reserve(2 * n + 1);
  for (int j1 = -n; j1 <= n; ++j1) {
    row_start_.push_back(members_.size());
    const int lo = std::max(-n, -n - j1);
    const int hi = std::min(n, n - j1);
    for (int j2 = lo; j2 <= hi; ++j2) members_.emplace_back(j1, j2);
  }
}

std::size_t IndexSet::position(const HexIndex& j) const {
  if (!contains(j)) throw std::out_of_range("IndexSet: index outside H_n");
  const int lo = std::max(-n_, -n_ - j.j1());
  return row_start_[j.j1() + n_] + static_cast<std::size_t>(j.j2() - lo);
}

std::size_t IndexSet::cardinality(int n) {
  const auto m = static_cast<std::size_t>(n);
  return 3 * m * m + 3 * m + 1;
}

IndexSet enumerate_hn(int n) { return IndexSet{n}; }

std::vector<HexIndex> ring_jk(int k) {
  if (k < 0) throw std::invalid_argument("ring_jk: k must be nonnegative");
  std::vector<HexIndex> out;
  out.reserve(k == 0 ? 1 : 6 * static_cast<std::size_t>(k));
  for_each_in_ring(k, [&](const HexIndex& j) { out.push_back(j); });
  return out;
}

double pairing(const HexIndex& j, const HomogeneousPoint& t) {
  const auto [a, b] = frequency_pair(j);
  return a * t.t1() + b * t.t2();
}

std::complex<double> phi(const HexIndex& j, const HomogeneousPoint& t) {
  return std::polar(1.0, 2.0 * std::numbers::pi / 3.0 * pairing(j, t));
}

CharacterTable::CharacterTable(int n, const HomogeneousPoint& t) : n_{n} {
  if (n < 0) throw std::invalid_argument("CharacterTable: radius must be nonnegative");
  const std::size_t len = 4 * static_cast<std::size_t>(n) + 1;
  first_.resize(len);
  second_.resize(len);
  const double w1 = 2.0 * std::numbers::pi / 3.0 * t.t1();
  const double w2 = 2.0 * std::numbers::pi / 3.0 * t.t2();
  for (int a = -2 * n; a <= 2 * n; ++a) {
    first_[a + 2 * n] = std::polar(1.0, a * w1);
    second_[a + 2 * n] = std::polar(1.0, a * w2);
  }
}

}  // namespace hexfs
