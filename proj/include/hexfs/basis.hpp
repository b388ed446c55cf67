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

#include <compare>
#include <complex>
#include <cstddef>
#include <vector>

#include "hexfs/hexcoord.hpp"

namespace hexfs {

/// Integer frequency j = (j1, j2, j3) with j1 + j2 + j3 = 0.
class HexIndex {
public:
  constexpr HexIndex() = default;
  constexpr HexIndex(int j1, int j2) : j1_{j1}, j2_{j2}, j3_{-j1 - j2} {}

  /// Throws std::invalid_argument unless j1 + j2 + j3 == 0.
  static HexIndex from_triple(int j1, int j2, int j3);

  constexpr int j1() const { return j1_; }
  constexpr int j2() const { return j2_; }
  constexpr int j3() const { return j3_; }

  constexpr HexIndex operator-() const { return {-j1_, -j2_}; }
  constexpr HexIndex operator+(const HexIndex& o) const { return {j1_ + o.j1_, j2_ + o.j2_}; }
  constexpr HexIndex operator-(const HexIndex& o) const { return {j1_ - o.j1_, j2_ - o.j2_}; }
  constexpr HexIndex rotated() const { return {j2_, j3_}; }

  // Lexicographic by (j1, j2); j3 is determined.
  constexpr auto operator<=>(const HexIndex& o) const {
    if (auto c = j1_ <=> o.j1_; c != 0) return c;
    return j2_ <=> o.j2_;
  }
  constexpr bool operator==(const HexIndex& o) const { return j1_ == o.j1_ && j2_ == o.j2_; }

private:
  int j1_ = 0;
  int j2_ = 0;
  int j3_ = 0;
};

/// max(|j1|, |j2|, |j3|): the ring J_k containing j.
int degree(const HexIndex& j);

/// H_n = { j : -n <= j1, j2, j3 <= n }, ordered lexicographically by (j1, j2).
class IndexSet {
public:
  explicit IndexSet(int n);

  int radius() const { return n_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<HexIndex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const HexIndex& operator[](std::size_t i) const { return members_[i]; }

  bool contains(const HexIndex& j) const { return degree(j) <= n_; }

  /// Position of j in members(); j must be contained.
  std::size_t position(const HexIndex& j) const;

  /// 3n^2 + 3n + 1
  static std::size_t cardinality(int n);

private:
  int n_;
  std::vector<HexIndex> members_;
  std::vector<std::size_t> row_start_;  // position of the first member with given j1
};

/// Throws std::invalid_argument for n < 0.
IndexSet enumerate_hn(int n);

/// J_k = H_k \ H_{k-1} (J_0 = H_0), in lexicographic order.
std::vector<HexIndex> ring_jk(int k);

/// Calls fn(j) for every j in J_k in lexicographic order without allocating.
template <class Fn>
void for_each_in_ring(int k, Fn&& fn) {
  if (k == 0) {
    fn(HexIndex{0, 0});
    return;
  }
  for (int j1 = -k; j1 <= k; ++j1) {
    const int lo = (j1 < 0) ? -k - j1 : -k;
    const int hi = (j1 > 0) ? k - j1 : k;
    if (j1 == -k || j1 == k) {
      for (int j2 = lo; j2 <= hi; ++j2) fn(HexIndex{j1, j2});
    } else {
      fn(HexIndex{j1, lo});
      fn(HexIndex{j1, hi});
    }
  }
}

/// Integer pair (a, b) = (j1 - j3, j2 - j3) with <j, t> = a t1 + b t2.
struct FrequencyPair {
  int a;
  int b;
};
constexpr FrequencyPair frequency_pair(const HexIndex& j) {
  return {j.j1() - j.j3(), j.j2() - j.j3()};
}

/// <j, t> evaluated as (j1 - j3) t1 + (j2 - j3) t2.
double pairing(const HexIndex& j, const HomogeneousPoint& t);

/// phi_j(t) = exp((2 pi i / 3) <j, t>)
std::complex<double> phi(const HexIndex& j, const HomogeneousPoint& t);

/// Characters phi_j(t) for all j in H_n at one fixed point t, evaluated as a
/// product of two precomputed one-dimensional exponentials.
class CharacterTable {
public:
  CharacterTable(int n, const HomogeneousPoint& t);

  int radius() const { return n_; }
  std::complex<double> operator()(const HexIndex& j) const {
    const auto [a, b] = frequency_pair(j);
    return first_[a + 2 * n_] * second_[b + 2 * n_];
  }

private:
  int n_;
  std::vector<std::complex<double>> first_;   // exp(2 pi i a t1 / 3), a in [-2n, 2n]
  std::vector<std::complex<double>> second_;  // exp(2 pi i b t2 / 3)
};

}  // namespace hexfs
