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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hexfs/kernels.hpp"
#include "hexfs/quadrature.hpp"

namespace hexfs {

enum class Smoothness { constant, trig_poly, smooth, lipschitz, hoelder };

std::string_view to_string(Smoothness s);

/// An H-periodic continuous function with a name and a smoothness tag.
/// `parameter` is the degree for trig_poly and the exponent for hoelder.
struct TestFunction {
  std::string name;
  PointFunction evaluator;
  Smoothness smoothness = Smoothness::smooth;
  double parameter = 0.0;

  std::complex<double> operator()(const HomogeneousPoint& t) const { return evaluator(t); }
};

TestFunction make_constant(double value);
TestFunction make_character(const HexIndex& j);

/// Catalog: f1 = Re phi_(1,0,-1) + 0.5 Re phi_(2,-1,-1) (degree 2),
/// f2 = exp(cos(2 pi (t1-t2)/3) + cos(2 pi (t2-t3)/3) + cos(2 pi (t3-t1)/3)),
/// f3 = hex_distance_to_lattice (Lipschitz 1), f4 = f3^alpha (Hoelder alpha),
/// and the character phi_(1,0,-1).
std::vector<TestFunction> builtin_test_functions(double alpha = 0.5);

/// Looks up "one", "f1".."f4", or "phi:j1,j2,j3". Throws std::invalid_argument
/// for unknown names.
TestFunction find_test_function(std::string_view name, double alpha = 0.5);

/// Fold test: f(t + s) == f(t) for random t and random lattice shifts s.
bool is_h_periodic(const TestFunction& f, int samples = 200, double tol = 1e-9,
                   std::uint64_t seed = 12345);

struct ReportRow {
  double param = 0.0;
  std::optional<double> param2;
  double measured = 0.0;
  double bound = 0.0;
  double ratio = 0.0;

  bool operator==(const ReportRow&) const = default;
};

/// measured / bound, NaN when bound is zero or not finite.
double guarded_ratio(double measured, double bound);

/// Rows of (parameter, measured, bound, ratio) from one sweep.
struct ExperimentReport {
  std::string param_name = "param";
  std::string param2_name;
  std::string measured_name = "measured";
  std::map<std::string, std::string> metadata;
  std::vector<ReportRow> rows;

  void add_row(double param, double measured, double bound,
               std::optional<double> param2 = std::nullopt);
  void sort_rows();

  /// Max and median of the finite ratios (NaN when there are none).
  double max_ratio() const;
  double median_ratio() const;
};

/// Lebesgue constant (1/|Omega|) int |K_n^delta| and moment
/// (1/|Omega|) int ||t|| |K_n^delta(t)| dt from one lattice-rule pass.
struct KernelNorms {
  double lebesgue = 0.0;
  double moment = 0.0;
};

/// Recommended refinement for kernels of degree n: 8(n+1).
int default_kernel_grid(int n);

/// Requires N >= n + 1 (the rule is then exact for the signed integral).
KernelNorms kernel_norms(int n, CesaroOrder order, int N);
double lebesgue_constant(int n, CesaroOrder order, int N);
double kernel_moment(int n, CesaroOrder order, int N);

/// lambda^(r) = (1/|Omega|) int ||t|| P_r(t) dt. Throws std::domain_error unless 0 <= r < 1.
double poisson_moment(double r, int N);

/// Refinement used for poisson_moment sweeps: max(64, ceil(24 / (1 - r))).
int default_poisson_grid(double r);

struct ModulusOptions {
  int point_grid_n = 32;  // evaluation points: nodes of HexGrid(point_grid_n)
  int directions = 200;   // shifts per radius, spread along the hex-norm sphere
  int radii = 4;          // radii u/radii, 2u/radii, ..., u
};

/// Lower estimate of omega_f(u) = sup_{0 < ||h|| <= u} sup_t |f(t) - f(t + h)|.
double modulus_of_continuity(const TestFunction& f, double u, const ModulusOptions& options = {});

/// max over grid nodes of |f - approximant|.
double sup_error(const TestFunction& f, const PointFunction& approximant, const HexGrid& grid);
double sup_error(const GridFunction& f, const GridFunction& approximant);

/// Argument of omega in the degree-of-approximation bound for (C, delta):
/// log(n+2)/(n+1)^delta for delta < 1, log(n+2)^2/(n+1) otherwise.
double cesaro_modulus_argument(int n, CesaroOrder order);

/// (1 - r) |log(1 - r)|
double poisson_modulus_argument(double r);

/// 1/((n+1)^delta sin(u)^delta) + 1/((n+1) sin u)
double lemma1_bound(int n, CesaroOrder order, double u);

/// count equally spaced values in [lo, hi].
std::vector<double> lemma1_u_grid(int count = 20, double lo = 0.05, double hi = 3.0915926535897931);

struct ApproximationSetup {
  int coeff_grid_n = 256;  // grid for the Fourier coefficients
  int eval_grid_n = 64;    // grid on which sup errors are measured
  ModulusOptions modulus;
};

/// Per n: measured = sup error of S_n^delta f, bound = log(n+2) omega(arg) for
/// delta < 1 and omega(arg) for delta >= 1 (see cesaro_modulus_argument).
/// Metadata "grid_stability": relative change of the last row's error on the
/// doubled evaluation grid (same for experiment_poisson).
ExperimentReport experiment_cesaro(const TestFunction& f, CesaroOrder order,
                                   std::span<const int> n_values, const ApproximationSetup& setup);

/// Per r: measured = sup error of U_r f, bound = omega((1-r)|log(1-r)|). The
/// coefficient table has degree table_degree; each r is truncated by
/// abel_poisson_truncation with the given tol. When the truncation reaches the
/// table degree, r is listed under metadata "truncation_capped" and its
/// "tail_estimate" entry extrapolates the last ring's size past the table.
ExperimentReport experiment_poisson(const TestFunction& f, std::span<const double> r_values,
                                    int table_degree, const ApproximationSetup& setup,
                                    double tol = 1e-10);

/// Per (n, u): measured = cesaro_cos_sum, bound = lemma1_bound. Requires 0 < delta < 1.
ExperimentReport verify_lemma1(std::span<const int> n_values, CesaroOrder order,
                               std::span<const double> u_values);

/// Sweeps used by the command-line front end. Each row is recomputed on the
/// doubled grid and the largest relative change goes to metadata "grid_stability".
ExperimentReport lebesgue_sweep(std::span<const int> n_values, CesaroOrder order,
                                std::optional<int> grid_n);
ExperimentReport moment_sweep(std::span<const int> n_values, CesaroOrder order,
                              std::optional<int> grid_n);
ExperimentReport poisson_moment_sweep(std::span<const double> r_values, std::optional<int> grid_n);

/// Decimal rendering with 12 significant digits.
std::string format_real(double v);

}  // namespace hexfs
