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

#include "hexfs/quadrature.hpp"

#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace hexfs {

namespace {

template <class T>
T pairwise_sum_impl(const T* v, std::size_t n) {
  if (n <= 16) {
    T s{};
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_impl(v, half) + pairwise_sum_impl(v + half, n - half);
}

}  // namespace

HexGrid::HexGrid(int N) : n_{N} {
  if (N < 1) throw std::invalid_argument("HexGrid: refinement must be >= 1, got " + std::to_string(N));
  const std::size_t count = 3 * static_cast<std::size_t>(N) * N;
  nodes_.reserve(count);
  k1_.reserve(count);
  k2_.reserve(count);
  const double inv = 1.0 / N;
  for (int a = -N; a < N; ++a) {
    for (int b = -N; b < N; ++b) {
      if (a + b < -N || a + b >= N) continue;
      nodes_.emplace_back(a * inv, b * inv);
      k1_.push_back(a);
      k2_.push_back(b);
    }
  }
  roots_.resize(3 * static_cast<std::size_t>(N));
  for (int m = 0; m < 3 * N; ++m) {
    roots_[m] = std::polar(1.0, 2.0 * std::numbers::pi * m / (3.0 * N));
  }
}

std::complex<double> HexGrid::unit_root(long long m) const {
  const long long period = 3LL * n_;
  long long r = m % period;
  if (r < 0) r += period;
  return roots_[static_cast<std::size_t>(r)];
}

std::complex<double> HexGrid::character(const HexIndex& j, std::size_t i) const {
  const auto [a, b] = frequency_pair(j);
  return unit_root(static_cast<long long>(a) * k1_[i] + static_cast<long long>(b) * k2_[i]);
}

std::shared_ptr<const HexGrid> build_grid(int N) { return std::make_shared<const HexGrid>(N); }

GridFunction::GridFunction(std::shared_ptr<const HexGrid> grid,
                           std::vector<std::complex<double>> values)
    : grid_{std::move(grid)}, values_{std::move(values)} {
  if (!grid_) throw std::invalid_argument("GridFunction: null grid");
  if (values_.size() != grid_->size()) {
    throw std::invalid_argument("GridFunction: expected " + std::to_string(grid_->size()) +
                                " values, got " + std::to_string(values_.size()));
  }
}

GridFunction sample(const PointFunction& f, std::shared_ptr<const HexGrid> grid) {
  std::vector<std::complex<double>> values(grid->size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    try {
      values[i] = f(grid->node(i));
    } catch (const std::exception& e) {
      throw std::runtime_error("sample: evaluation failed at node " + std::to_string(i) + ": " +
                               e.what());
    }
  }
  return GridFunction{std::move(grid), std::move(values)};
}

double pairwise_sum(std::span<const double> v) { return pairwise_sum_impl(v.data(), v.size()); }

std::complex<double> pairwise_sum(std::span<const std::complex<double>> v) {
  return pairwise_sum_impl(v.data(), v.size());
}

std::complex<double> mean_integral(const GridFunction& g) {
  return pairwise_sum(g.values()) / static_cast<double>(g.values().size());
}

std::complex<double> fourier_coeff(const GridFunction& g, const HexIndex& j) {
  const HexGrid& grid = g.grid();
  std::vector<std::complex<double>> terms(grid.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    terms[i] = g.values()[i] * std::conj(grid.character(j, i));
  }
  return pairwise_sum(terms) / static_cast<double>(terms.size());
}

double weighted_abs_integral(const GridFunction& g, const RealPointFunction& weight) {
  const HexGrid& grid = g.grid();
  std::vector<double> terms(grid.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    terms[i] = weight(grid.node(i)) * std::abs(g.values()[i]);
  }
  return pairwise_sum(terms) / static_cast<double>(terms.size());
}

}  // namespace hexfs
