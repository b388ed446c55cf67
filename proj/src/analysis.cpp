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

#include "hexfs/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "hexfs/means.hpp"

namespace hexfs {

namespace {

constexpr double kPi = std::numbers::pi;

// Vertices of the unit hex-norm sphere in cyclic order.
constexpr std::array<HomogeneousPoint, 6> kHexVertices{
    HomogeneousPoint{1.0, 0.0},  HomogeneousPoint{1.0, -1.0}, HomogeneousPoint{0.0, -1.0},
    HomogeneousPoint{-1.0, 0.0}, HomogeneousPoint{-1.0, 1.0}, HomogeneousPoint{0.0, 1.0}};

void require_n_values(std::span<const int> n_values, const char* who) {
  if (n_values.empty()) throw std::invalid_argument(std::string(who) + ": empty n list");
  for (int n : n_values) {
    if (n < 0) throw std::invalid_argument(std::string(who) + ": n must be nonnegative");
  }
}

void require_radius(double r, const char* who) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::domain_error(std::string(who) + ": r must satisfy 0 <= r < 1, got " + format_real(r));
  }
}

std::string join_ints(std::span<const int> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join_reals(std::span<const double> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_real(v[i]);
  }
  return out;
}

double log2p(int n) { return std::log(n + 2.0); }

}  // namespace

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string_view to_string(Smoothness s) {
  switch (s) {
    case Smoothness::constant: return "constant";
    case Smoothness::trig_poly: return "trig_poly";
    case Smoothness::smooth: return "smooth";
    case Smoothness::lipschitz: return "lipschitz";
    case Smoothness::hoelder: return "hoelder";
  }
  return "unknown";
}

TestFunction make_constant(double value) {
  return {"one", [value](const HomogeneousPoint&) { return std::complex<double>{value, 0.0}; },
          Smoothness::constant, 0.0};
}

TestFunction make_character(const HexIndex& j) {
  std::string name = "phi:" + std::to_string(j.j1()) + "," + std::to_string(j.j2()) + "," +
                     std::to_string(j.j3());
  return {std::move(name), [j](const HomogeneousPoint& t) { return phi(j, t); },
          Smoothness::trig_poly, static_cast<double>(degree(j))};
}

std::vector<TestFunction> builtin_test_functions(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("builtin_test_functions: alpha must lie in (0, 1]");
  }
  std::vector<TestFunction> out;
  out.push_back({"f1",
                 [](const HomogeneousPoint& t) {
                   return std::complex<double>{
                       phi(HexIndex{1, 0}, t).real() + 0.5 * phi(HexIndex{2, -1}, t).real(), 0.0};
                 },
                 Smoothness::trig_poly, 2.0});
  out.push_back({"f2",
                 [](const HomogeneousPoint& t) {
                   const double c = 2.0 * kPi / 3.0;
                   const double e = std::cos(c * (t.t1() - t.t2())) +
                                    std::cos(c * (t.t2() - t.t3())) +
                                    std::cos(c * (t.t3() - t.t1()));
                   return std::complex<double>{std::exp(e), 0.0};
                 },
                 Smoothness::smooth, 0.0});
  out.push_back({"f3",
                 [](const HomogeneousPoint& t) {
                   return std::complex<double>{hex_distance_to_lattice(t), 0.0};
                 },
                 Smoothness::lipschitz, 1.0});
  out.push_back({"f4",
                 [alpha](const HomogeneousPoint& t) {
                   return std::complex<double>{std::pow(hex_distance_to_lattice(t), alpha), 0.0};
                 },
                 Smoothness::hoelder, alpha});
  out.push_back(make_character(HexIndex{1, 0}));
  return out;
}

TestFunction find_test_function(std::string_view name, double alpha) {
  if (name == "one") return make_constant(1.0);
  if (name.starts_with("phi:")) {
    const std::string body{name.substr(4)};
    int j1 = 0, j2 = 0, j3 = 0;
    char tail = 0;
    if (std::sscanf(body.c_str(), "%d,%d,%d%c", &j1, &j2, &j3, &tail) != 3) {
      throw std::invalid_argument("malformed character name '" + std::string(name) +
                                  "', expected phi:j1,j2,j3");
    }
    return make_character(HexIndex::from_triple(j1, j2, j3));
  }
  for (auto& f : builtin_test_functions(alpha)) {
    if (f.name == name) return f;
  }
  throw std::invalid_argument("unknown test function '" + std::string(name) + "'");
}

bool is_h_periodic(const TestFunction& f, int samples, double tol, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_int_distribution<int> mult(-3, 3);
  for (int i = 0; i < samples; ++i) {
    const HomogeneousPoint t{coord(rng), coord(rng)};
    const int p = mult(rng), q = mult(rng);
    const HomogeneousPoint s{p + 2.0 * q, p - 1.0 * q};
    const auto v = f(t);
    if (std::abs(f(t + s) - v) > tol) return false;
    if (std::abs(f(fold_to_omega(t)) - v) > tol) return false;
  }
  return true;
}

double guarded_ratio(double measured, double bound) {
  if (!(bound != 0.0) || !std::isfinite(bound)) return std::numeric_limits<double>::quiet_NaN();
  return measured / bound;
}

void ExperimentReport::add_row(double param, double measured, double bound,
                               std::optional<double> param2) {
  rows.push_back({param, param2, measured, bound, guarded_ratio(measured, bound)});
}

void ExperimentReport::sort_rows() {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& x, const ReportRow& y) {
    if (x.param != y.param) return x.param < y.param;
    return x.param2.value_or(0.0) < y.param2.value_or(0.0);
  });
}

namespace {

std::vector<double> finite_ratios(const std::vector<ReportRow>& rows) {
  std::vector<double> out;
  for (const auto& r : rows) {
    if (std::isfinite(r.ratio)) out.push_back(r.ratio);
  }
  return out;
}

}  // namespace

double ExperimentReport::max_ratio() const {
  const auto v = finite_ratios(rows);
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  return *std::max_element(v.begin(), v.end());
}

double ExperimentReport::median_ratio() const {
  auto v = finite_ratios(rows);
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return (v.size() % 2) ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

int default_kernel_grid(int n) { return 8 * (n + 1); }

KernelNorms kernel_norms(int n, CesaroOrder order, int N) {
  if (n < 0) throw std::invalid_argument("kernel_norms: n must be nonnegative");
  if (N < n + 1) {
    throw std::invalid_argument("kernel_norms: grid refinement " + std::to_string(N) +
                                " below n + 1 = " + std::to_string(n + 1));
  }
  const HexGrid grid(N);
  const CesaroKernel kernel(n, order);
  std::vector<double> abs_terms(grid.size());
  std::vector<double> moment_terms(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double k = std::abs(kernel(grid.node(i)));
    abs_terms[i] = k;
    moment_terms[i] = hex_norm(grid.node(i)) * k;
  }
  const double count = static_cast<double>(grid.size());
  return {pairwise_sum(abs_terms) / count, pairwise_sum(moment_terms) / count};
}

double lebesgue_constant(int n, CesaroOrder order, int N) { return kernel_norms(n, order, N).lebesgue; }

double kernel_moment(int n, CesaroOrder order, int N) { return kernel_norms(n, order, N).moment; }

double poisson_moment(double r, int N) {
  require_radius(r, "poisson_moment");
  const HexGrid grid(N);
  std::vector<double> terms(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    terms[i] = hex_norm(grid.node(i)) * poisson_compact(r, grid.node(i));
  }
  return pairwise_sum(terms) / static_cast<double>(grid.size());
}

int default_poisson_grid(double r) {
  require_radius(r, "default_poisson_grid");
  return std::max(64, static_cast<int>(std::ceil(24.0 / (1.0 - r))));
}

double modulus_of_continuity(const TestFunction& f, double u, const ModulusOptions& options) {
  if (!(u > 0.0)) throw std::invalid_argument("modulus_of_continuity: u must be positive");
  if (options.point_grid_n < 1 || options.directions < 1 || options.radii < 1) {
    throw std::invalid_argument("modulus_of_continuity: sampling sizes must be positive");
  }
  const HexGrid points(options.point_grid_n);
  std::vector<std::complex<double>> base(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) base[i] = f(points.node(i));

  double best = 0.0;
  for (int ri = 1; ri <= options.radii; ++ri) {
    const double rho = u * ri / options.radii;
    for (int d = 0; d < options.directions; ++d) {
      const double s = 6.0 * d / options.directions;
      const int e = std::min(static_cast<int>(s), 5);
      const double frac = s - e;
      const HomogeneousPoint& v0 = kHexVertices[e];
      const HomogeneousPoint& v1 = kHexVertices[(e + 1) % 6];
      const HomogeneousPoint h = (v0 + (v1 - v0) * frac) * rho;
      for (std::size_t i = 0; i < points.size(); ++i) {
        best = std::max(best, std::abs(base[i] - f(points.node(i) + h)));
      }
    }
  }
  return best;
}

double sup_error(const TestFunction& f, const PointFunction& approximant, const HexGrid& grid) {
  double m = 0.0;
  for (const auto& t : grid.nodes()) m = std::max(m, std::abs(f(t) - approximant(t)));
  return m;
}

double sup_error(const GridFunction& f, const GridFunction& approximant) {
  if (f.grid_ptr() != approximant.grid_ptr() &&
      f.grid().refinement() != approximant.grid().refinement()) {
    throw std::invalid_argument("sup_error: samples live on different grids");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    m = std::max(m, std::abs(f.values()[i] - approximant.values()[i]));
  }
  return m;
}

double cesaro_modulus_argument(int n, CesaroOrder order) {
  if (n < 0) throw std::invalid_argument("cesaro_modulus_argument: n must be nonnegative");
  const double delta = order.delta();
  if (delta < 1.0) return log2p(n) / std::pow(n + 1.0, delta);
  return log2p(n) * log2p(n) / (n + 1.0);
}

double poisson_modulus_argument(double r) {
  require_radius(r, "poisson_modulus_argument");
  return (1.0 - r) * std::abs(std::log1p(-r));
}

double lemma1_bound(int n, CesaroOrder order, double u) {
  if (n < 0) throw std::invalid_argument("lemma1_bound: n must be nonnegative");
  if (!(u > 0.0 && u < kPi)) throw std::invalid_argument("lemma1_bound: u must lie in (0, pi)");
  const double s = std::sin(u);
  return 1.0 / (std::pow(n + 1.0, order.delta()) * std::pow(s, order.delta())) +
         1.0 / ((n + 1.0) * s);
}

std::vector<double> lemma1_u_grid(int count, double lo, double hi) {
  if (count < 1 || !(lo > 0.0 && lo <= hi && hi < kPi)) {
    throw std::invalid_argument("lemma1_u_grid: need count >= 1 and 0 < lo <= hi < pi");
  }
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[i] = (count == 1) ? lo : lo + (hi - lo) * i / (count - 1);
  }
  return out;
}

namespace {

// |a - b| / |a|; the drift of a functional when its grid is doubled.
double relative_change(double a, double b) { return a == 0.0 ? std::abs(b) : std::abs(a - b) / std::abs(a); }

}  // namespace

ExperimentReport experiment_cesaro(const TestFunction& f, CesaroOrder order,
                                   std::span<const int> n_values, const ApproximationSetup& setup) {
  require_n_values(n_values, "experiment_cesaro");
  const int n_max = *std::max_element(n_values.begin(), n_values.end());
  const auto coeff_grid = build_grid(setup.coeff_grid_n);
  const auto eval_grid = build_grid(setup.eval_grid_n);
  const CoefficientTable table = compute_coefficients(sample(f.evaluator, coeff_grid), n_max);
  const GridFunction exact = sample(f.evaluator, eval_grid);

  ExperimentReport report;
  report.param_name = "n";
  report.measured_name = "error";
  const bool low = order.delta() < 1.0;
  for (int n : n_values) {
    const GridFunction approx = evaluate_on_grid(table, cesaro_multipliers(n, order), eval_grid);
    const double err = sup_error(exact, approx);
    const double omega = modulus_of_continuity(f, cesaro_modulus_argument(n, order), setup.modulus);
    report.add_row(n, err, (low ? log2p(n) : 1.0) * omega);
  }
  report.sort_rows();
  // last row re-measured on the doubled evaluation grid
  {
    const auto fine = build_grid(2 * setup.eval_grid_n);
    const auto& last = report.rows.back();
    const double err = sup_error(sample(f.evaluator, fine),
                                 evaluate_on_grid(table, cesaro_multipliers(static_cast<int>(last.param), order), fine));
    report.metadata["grid_stability"] = format_real(relative_change(last.measured, err));
  }
  report.metadata["experiment"] = "cesaro-approx";
  report.metadata["function"] = f.name;
  report.metadata["delta"] = format_real(order.delta());
  report.metadata["n_list"] = join_ints(n_values);
  report.metadata["coeff_grid_n"] = std::to_string(setup.coeff_grid_n);
  report.metadata["eval_grid_n"] = std::to_string(setup.eval_grid_n);
  report.metadata["bound"] = low ? "log(n+2)*omega(log(n+2)/(n+1)^delta)"
                                 : "omega(log(n+2)^2/(n+1))";
  report.metadata["log_shift"] = "log(n+2) stands for log(n+1)";
  return report;
}

ExperimentReport experiment_poisson(const TestFunction& f, std::span<const double> r_values,
                                    int table_degree, const ApproximationSetup& setup, double tol) {
  if (r_values.empty()) throw std::invalid_argument("experiment_poisson: empty r list");
  for (double r : r_values) require_radius(r, "experiment_poisson");
  if (table_degree < 0) throw std::invalid_argument("experiment_poisson: negative table degree");
  const auto coeff_grid = build_grid(setup.coeff_grid_n);
  const auto eval_grid = build_grid(setup.eval_grid_n);
  const CoefficientTable table = compute_coefficients(sample(f.evaluator, coeff_grid), table_degree);
  const GridFunction exact = sample(f.evaluator, eval_grid);

  ExperimentReport report;
  report.param_name = "r";
  report.measured_name = "error";
  std::string rings;
  std::string tails;
  std::string capped;
  for (double r : r_values) {
    const int K = abel_poisson_truncation(table, r, tol);
    const GridFunction approx = evaluate_on_grid(table, poisson_multipliers(r, K), eval_grid);
    const double err = sup_error(exact, approx);
    const double u = poisson_modulus_argument(r);
    const double bound = (u > 0.0) ? modulus_of_continuity(f, u, setup.modulus) : 0.0;
    report.add_row(r, err, bound);
    double tail = abel_poisson_tail(table, r, K);
    if (K == table_degree && r > 0.0) {
      // capped: extrapolate the last ring's size past the table
      double w = 0.0;
      double rk = std::pow(r, K + 1);
      for (int k = K + 1; rk * k > 1e-18 * (K + 1); ++k, rk *= r) w += 6.0 * k * rk;
      tail = table.ring_max(K) * w;
      if (!capped.empty()) capped += ' ';
      capped += format_real(r);
    }
    if (!rings.empty()) {
      rings += ' ';
      tails += ' ';
    }
    rings += std::to_string(K);
    tails += format_real(tail);
  }
  report.sort_rows();
  {
    const auto fine = build_grid(2 * setup.eval_grid_n);
    const auto& last = report.rows.back();
    const int K = abel_poisson_truncation(table, last.param, tol);
    const double err = sup_error(sample(f.evaluator, fine),
                                 evaluate_on_grid(table, poisson_multipliers(last.param, K), fine));
    report.metadata["grid_stability"] = format_real(relative_change(last.measured, err));
  }
  report.metadata["experiment"] = "poisson-approx";
  report.metadata["function"] = f.name;
  report.metadata["r_list"] = join_reals(r_values);
  report.metadata["table_degree"] = std::to_string(table_degree);
  report.metadata["coeff_grid_n"] = std::to_string(setup.coeff_grid_n);
  report.metadata["eval_grid_n"] = std::to_string(setup.eval_grid_n);
  report.metadata["tol"] = format_real(tol);
  report.metadata["truncation_rings"] = rings;
  report.metadata["tail_estimate"] = tails;
  report.metadata["truncation_capped"] = capped.empty() ? "none" : capped;
  report.metadata["bound"] = "omega((1-r)|log(1-r)|)";
  return report;
}

ExperimentReport verify_lemma1(std::span<const int> n_values, CesaroOrder order,
                               std::span<const double> u_values) {
  require_n_values(n_values, "verify_lemma1");
  if (!(order.delta() < 1.0)) throw std::invalid_argument("verify_lemma1: requires 0 < delta < 1");
  if (u_values.empty()) throw std::invalid_argument("verify_lemma1: empty u list");
  ExperimentReport report;
  report.param_name = "n";
  report.param2_name = "u";
  report.measured_name = "cos_sum";
  for (int n : n_values) {
    for (double u : u_values) {
      report.add_row(n, cesaro_cos_sum(n, order, u), lemma1_bound(n, order, u), u);
    }
  }
  report.sort_rows();
  report.metadata["experiment"] = "lemma1";
  report.metadata["delta"] = format_real(order.delta());
  report.metadata["n_list"] = join_ints(n_values);
  report.metadata["u_count"] = std::to_string(u_values.size());
  report.metadata["bound"] = "1/((n+1)^delta sin(u)^delta) + 1/((n+1) sin u)";
  report.metadata["max_ratio"] = format_real(report.max_ratio());
  return report;
}

ExperimentReport lebesgue_sweep(std::span<const int> n_values, CesaroOrder order,
                                std::optional<int> grid_n) {
  require_n_values(n_values, "lebesgue_sweep");
  ExperimentReport report;
  report.param_name = "n";
  report.measured_name = "L";
  const bool low = order.delta() < 1.0;
  double drift = 0.0;
  for (int n : n_values) {
    const int N = grid_n.value_or(default_kernel_grid(n));
    const double v = lebesgue_constant(n, order, N);
    drift = std::max(drift, relative_change(v, lebesgue_constant(n, order, 2 * N)));
    report.add_row(n, v, low ? log2p(n) : 1.0);
  }
  report.sort_rows();
  report.metadata["grid_stability"] = format_real(drift);
  report.metadata["experiment"] = "lebesgue";
  report.metadata["delta"] = format_real(order.delta());
  report.metadata["grid_n"] = grid_n ? std::to_string(*grid_n) : "8(n+1)";
  report.metadata["bound"] = low ? "log(n+2)" : "1";
  return report;
}

ExperimentReport moment_sweep(std::span<const int> n_values, CesaroOrder order,
                              std::optional<int> grid_n) {
  require_n_values(n_values, "moment_sweep");
  ExperimentReport report;
  report.param_name = "n";
  report.measured_name = "d";
  const bool low = order.delta() < 1.0;
  double drift = 0.0;
  for (int n : n_values) {
    const int N = grid_n.value_or(default_kernel_grid(n));
    const double v = kernel_moment(n, order, N);
    drift = std::max(drift, relative_change(v, kernel_moment(n, order, 2 * N)));
    report.add_row(n, v, cesaro_modulus_argument(n, order));
  }
  report.sort_rows();
  report.metadata["grid_stability"] = format_real(drift);
  report.metadata["experiment"] = "moment";
  report.metadata["delta"] = format_real(order.delta());
  report.metadata["grid_n"] = grid_n ? std::to_string(*grid_n) : "8(n+1)";
  report.metadata["bound"] = low ? "log(n+2)/(n+1)^delta" : "log(n+2)^2/(n+1)";
  return report;
}

ExperimentReport poisson_moment_sweep(std::span<const double> r_values, std::optional<int> grid_n) {
  if (r_values.empty()) throw std::invalid_argument("poisson_moment_sweep: empty r list");
  for (double r : r_values) require_radius(r, "poisson_moment_sweep");
  ExperimentReport report;
  report.param_name = "r";
  report.measured_name = "lambda";
  double drift = 0.0;
  for (double r : r_values) {
    const int N = grid_n.value_or(default_poisson_grid(r));
    const double v = poisson_moment(r, N);
    drift = std::max(drift, relative_change(v, poisson_moment(r, 2 * N)));
    report.add_row(r, v, r > 0.0 ? poisson_modulus_argument(r) : 0.0);
  }
  report.sort_rows();
  report.metadata["grid_stability"] = format_real(drift);
  report.metadata["experiment"] = "poisson-moment";
  report.metadata["grid_n"] = grid_n ? std::to_string(*grid_n) : "max(64, ceil(24/(1-r)))";
  report.metadata["bound"] = "(1-r)|log(1-r)|";
  return report;
}

}  // namespace hexfs
