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
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "hexfs/basis.hpp"
#include "hexfs/hexcoord.hpp"

namespace hexfs {

using PointFunction = std::function<std::complex<double>(const HomogeneousPoint&)>;
using RealPointFunction = std::function<double(const HomogeneousPoint&)>;

/// Equal-weight lattice rule on Omega with refinement N:
///
///     nodes = { (k1, k2, -k1-k2) / N : -N <= k1, k2, k1+k2 < N }
///
/// 3N^2 nodes in lexicographic (k1, k2) order, each carrying weight 1/N^2 so the
/// weights sum to |Omega| = 3 in the (t1, t2) parametrization. The node set is a
/// complete residue system of (1/N) Z^2 modulo the periodicity lattice, so the
/// rule integrates phi_j exactly whenever the alias lattice misses j.
class HexGrid {
public:
  /// Throws std::invalid_argument for N < 1.
  explicit HexGrid(int N);

  int refinement() const { return n_; }
  std::size_t size() const { return nodes_.size(); }
  double cell_weight() const { return 1.0 / (static_cast<double>(n_) * n_); }

  const std::vector<HomogeneousPoint>& nodes() const { return nodes_; }
  const HomogeneousPoint& node(std::size_t i) const { return nodes_[i]; }

  /// Integer coordinates (k1, k2) of node i.
  int k1(std::size_t i) const { return k1_[i]; }
  int k2(std::size_t i) const { return k2_[i]; }

  /// exp(2 pi i m / (3N)) for any integer m (reduced exactly modulo 3N).
  std::complex<double> unit_root(long long m) const;

  /// Table exp(2 pi i m / (3N)), m = 0..3N-1.
  const std::vector<std::complex<double>>& unit_roots() const { return roots_; }

  /// phi_j at node i, via the exact root-of-unity table.
  std::complex<double> character(const HexIndex& j, std::size_t i) const;

private:
  int n_;
  std::vector<HomogeneousPoint> nodes_;
  std::vector<int> k1_;
  std::vector<int> k2_;
  std::vector<std::complex<double>> roots_;  // size 3N
};

std::shared_ptr<const HexGrid> build_grid(int N);

/// Complex samples aligned with the node order of a grid.
class GridFunction {
public:
  GridFunction(std::shared_ptr<const HexGrid> grid, std::vector<std::complex<double>> values);

  const HexGrid& grid() const { return *grid_; }
  const std::shared_ptr<const HexGrid>& grid_ptr() const { return grid_; }
  const std::vector<std::complex<double>>& values() const { return values_; }
  std::vector<std::complex<double>>& values() { return values_; }

private:
  std::shared_ptr<const HexGrid> grid_;
  std::vector<std::complex<double>> values_;
};

/// values[i] = f(nodes[i]). Evaluation failures are rethrown as
/// std::runtime_error naming the node index.
GridFunction sample(const PointFunction& f, std::shared_ptr<const HexGrid> grid);

/// Pairwise (tree-order) summation; the order depends only on the length.
double pairwise_sum(std::span<const double> v);
std::complex<double> pairwise_sum(std::span<const std::complex<double>> v);

/// (1/|Omega|) int_Omega g, i.e. the mean of the samples.
std::complex<double> mean_integral(const GridFunction& g);

/// Discrete hexagonal Fourier coefficient (1/|Omega|) int g conj(phi_j).
std::complex<double> fourier_coeff(const GridFunction& g, const HexIndex& j);

/// (1/|Omega|) int weight(t) |g(t)| dt.
double weighted_abs_integral(const GridFunction& g, const RealPointFunction& weight);

}  // namespace hexfs
