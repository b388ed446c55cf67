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

#include "hexfs/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "hexfs/analysis.hpp"
#include "hexfs/kernels.hpp"
#include "hexfs/means.hpp"
#include "hexfs/report_io.hpp"

namespace hexfs::cli {

namespace {

const std::vector<int> kDefaultApproxN{4, 6, 8, 12, 16, 24, 32, 48, 64};
const std::vector<double> kDefaultRadii{0.5, 0.7, 0.9, 0.95, 0.99};
constexpr int kDefaultPoissonTable = 256;
constexpr int kDefaultLemmaNMax = 64;

const std::map<std::string, Command> kCommands{
    {"kernel-eval", Command::kernel_eval},       {"lebesgue", Command::lebesgue},
    {"moment", Command::moment},                 {"poisson-moment", Command::poisson_moment},
    {"cesaro-approx", Command::cesaro_approx},   {"poisson-approx", Command::poisson_approx},
    {"lemma1", Command::lemma1},                 {"coeffs", Command::coeffs}};

const std::map<Command, std::string> kDescriptions{
    {Command::kernel_eval, "evaluate a kernel at points"},
    {Command::lebesgue, "Lebesgue constants of the (C, delta) kernels"},
    {Command::moment, "first moments of the (C, delta) kernels"},
    {Command::poisson_moment, "first moments of the Poisson kernel"},
    {Command::cesaro_approx, "sup error of (C, delta) means against the modulus bound"},
    {Command::poisson_approx, "sup error of Abel-Poisson means against the modulus bound"},
    {Command::lemma1, "cosine sums against their bound over (n, u)"},
    {Command::coeffs, "Fourier coefficients of a test function"}};

[[noreturn]] void usage(const std::string& msg) { throw UsageError(msg); }

std::vector<int> sweep_n(const RunConfig& c) {
  if (!c.n_list.empty()) return c.n_list;
  std::vector<int> out(static_cast<std::size_t>(*c.n_max) + 1);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::vector<int> approx_n(const RunConfig& c) {
  if (!c.n_list.empty()) return c.n_list;
  if (c.n_max) return sweep_n(c);
  return kDefaultApproxN;
}

std::vector<double> radii(const RunConfig& c) { return c.r_list.empty() ? kDefaultRadii : c.r_list; }

int coeff_grid_for_cesaro(const RunConfig& c) {
  const auto ns = approx_n(c);
  const int n_max = *std::max_element(ns.begin(), ns.end());
  return c.grid_n.value_or(std::max(256, 8 * (n_max + 1)));
}

int poisson_table_degree(const RunConfig& c) { return c.n_max.value_or(kDefaultPoissonTable); }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string render(const ExperimentReport& report, OutputFormat format) {
  return format == OutputFormat::json ? report_to_json(report) : report_to_csv(report);
}

void stamp(std::map<std::string, std::string>& metadata, const RunConfig& c) {
  metadata["command"] = std::string(command_name(c.command));
  if (c.timestamp) metadata["timestamp"] = utc_timestamp();
}

double evaluate_kernel(const RunConfig& c, const HomogeneousPoint& t) {
  if (c.kernel == "dirichlet") return dirichlet(*c.n, t);
  if (c.kernel == "theta") return theta(*c.n, t);
  if (c.kernel == "cesaro") return cesaro_kernel(*c.n, CesaroOrder(c.delta), t);
  if (c.kernel == "poisson") return poisson_compact(c.r_list.front(), t);
  return poisson_series(c.r_list.front(), t, c.tol);
}

std::string kernel_eval(const RunConfig& c) {
  std::map<std::string, std::string> metadata{{"kernel", c.kernel}};
  if (c.n) metadata["n"] = std::to_string(*c.n);
  if (c.kernel == "cesaro") metadata["delta"] = format_real(c.delta);
  if (c.kernel == "poisson" || c.kernel == "poisson-series") metadata["r"] = format_real(c.r_list.front());
  if (c.kernel == "poisson-series") metadata["tol"] = format_real(c.tol);
  stamp(metadata, c);

  std::vector<double> values;
  for (const auto& t : c.points) values.push_back(evaluate_kernel(c, t));

  if (c.format == OutputFormat::csv) {
    std::string out;
    for (const auto& [k, v] : metadata) out += "# " + k + "=" + v + "\n";
    out += "t1,t2,t3,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
      const auto& t = c.points[i];
      out += format_real(t.t1()) + "," + format_real(t.t2()) + "," + format_real(t.t3()) + "," +
             format_real(values[i]) + "\n";
    }
    return out;
  }
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : metadata) doc["metadata"][k] = v;
  doc["rows"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& t = c.points[i];
    nlohmann::ordered_json row;
    row["t1"] = round12(t.t1());
    row["t2"] = round12(t.t2());
    row["t3"] = round12(t.t3());
    if (std::isfinite(values[i])) {
      row["value"] = round12(values[i]);
    } else {
      row["value"] = nullptr;
    }
    doc["rows"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

std::string execute(const RunConfig& c) {
  switch (c.command) {
    case Command::kernel_eval:
      return kernel_eval(c);
    case Command::lebesgue:
    case Command::moment: {
      const auto ns = sweep_n(c);
      auto report = c.command == Command::lebesgue ? lebesgue_sweep(ns, CesaroOrder(c.delta), c.grid_n)
                                                   : moment_sweep(ns, CesaroOrder(c.delta), c.grid_n);
      stamp(report.metadata, c);
      return render(report, c.format);
    }
    case Command::poisson_moment: {
      auto report = poisson_moment_sweep(radii(c), c.grid_n);
      stamp(report.metadata, c);
      return render(report, c.format);
    }
    case Command::cesaro_approx: {
      ApproximationSetup setup;
      setup.coeff_grid_n = coeff_grid_for_cesaro(c);
      setup.eval_grid_n = c.eval_n;
      const auto ns = approx_n(c);
      auto report = experiment_cesaro(find_test_function(c.function, c.alpha), CesaroOrder(c.delta),
                                      ns, setup);
      report.metadata["alpha"] = format_real(c.alpha);
      stamp(report.metadata, c);
      return render(report, c.format);
    }
    case Command::poisson_approx: {
      ApproximationSetup setup;
      const int degree = poisson_table_degree(c);
      setup.coeff_grid_n = c.grid_n.value_or(std::max(64, 2 * degree));
      setup.eval_grid_n = c.eval_n;
      auto report = experiment_poisson(find_test_function(c.function, c.alpha), radii(c), degree,
                                       setup, c.tol);
      report.metadata["alpha"] = format_real(c.alpha);
      stamp(report.metadata, c);
      return render(report, c.format);
    }
    case Command::lemma1: {
      RunConfig d = c;
      if (!d.n_max && d.n_list.empty()) d.n_max = kDefaultLemmaNMax;
      const auto us = lemma1_u_grid(c.u_count);
      auto report = verify_lemma1(sweep_n(d), CesaroOrder(c.delta), us);
      stamp(report.metadata, c);
      return render(report, c.format);
    }
    case Command::coeffs: {
      const int N = c.grid_n.value_or(2 * (*c.n_max + 1));
      const auto f = find_test_function(c.function, c.alpha);
      const auto table = compute_coefficients(sample(f.evaluator, build_grid(N)), *c.n_max);
      std::map<std::string, std::string> metadata{{"function", f.name},
                                                  {"n_max", std::to_string(*c.n_max)},
                                                  {"grid_n", std::to_string(N)}};
      if (f.smoothness == Smoothness::hoelder) metadata["alpha"] = format_real(c.alpha);
      stamp(metadata, c);
      return c.format == OutputFormat::json ? coefficients_to_json(table, metadata)
                                            : coefficients_to_csv(table, metadata);
    }
  }
  usage("unknown command");
}

}  // namespace

std::string_view command_name(Command c) {
  for (const auto& [name, cmd] : kCommands) {
    if (cmd == c) return name;
  }
  return "unknown";
}

HomogeneousPoint parse_point(std::string_view text) {
  const std::string s{text};
  double t1 = 0, t2 = 0, t3 = 0;
  char tail = 0;
  if (std::sscanf(s.c_str(), "%lf,%lf,%lf%c", &t1, &t2, &t3, &tail) != 3) {
    usage("point '" + s + "' must be given as t1,t2,t3");
  }
  if (!std::isfinite(t1) || !std::isfinite(t2) || !std::isfinite(t3)) {
    usage("point '" + s + "' has non-finite coordinates");
  }
  if (std::abs(t1 + t2 + t3) > 1e-9) usage("point '" + s + "' violates t1 + t2 + t3 = 0");
  return HomogeneousPoint{t1, t2};
}

void validate(const RunConfig& c) {
  if (!(c.delta > 0.0) || !std::isfinite(c.delta)) usage("--delta must be positive");
  if (!(c.alpha > 0.0 && c.alpha <= 1.0)) usage("--alpha must lie in (0, 1]");
  if (!(c.tol > 0.0)) usage("--tol must be positive");
  if (c.grid_n && *c.grid_n < 1) usage("--grid-n must be positive");
  if (c.eval_n < 1) usage("--eval-n must be positive");
  if (c.n_max && *c.n_max < 0) usage("--n-max must be nonnegative");
  for (int n : c.n_list) {
    if (n < 0) usage("--n-list entries must be nonnegative");
  }
  for (double r : c.r_list) {
    if (!std::isfinite(r)) usage("--r values must be finite");
  }

  const bool needs_sweep = c.command == Command::lebesgue || c.command == Command::moment;
  if (needs_sweep && c.n_list.empty() && !c.n_max) usage("--n-max or --n-list is required");

  auto require_grid_covers = [&](int n_top) {
    if (c.grid_n && *c.grid_n < n_top + 1) {
      usage("--grid-n " + std::to_string(*c.grid_n) + " is below n + 1 = " + std::to_string(n_top + 1));
    }
  };

  switch (c.command) {
    case Command::kernel_eval: {
      static const std::vector<std::string> kinds{"dirichlet", "theta", "cesaro", "poisson",
                                                  "poisson-series"};
      if (std::find(kinds.begin(), kinds.end(), c.kernel) == kinds.end()) {
        usage("--kernel must be one of dirichlet, theta, cesaro, poisson, poisson-series");
      }
      if (c.points.empty()) usage("kernel-eval needs at least one --t t1,t2,t3");
      const bool indexed = c.kernel == "dirichlet" || c.kernel == "theta" || c.kernel == "cesaro";
      if (indexed && !c.n) usage("--n is required for the " + c.kernel + " kernel");
      if (indexed && *c.n < (c.kernel == "theta" ? -1 : 0)) usage("--n is out of range");
      if (!indexed && c.r_list.size() != 1) usage("the " + c.kernel + " kernel needs exactly one --r");
      break;
    }
    case Command::lebesgue:
    case Command::moment: {
      const auto ns = sweep_n(c);
      require_grid_covers(*std::max_element(ns.begin(), ns.end()));
      break;
    }
    case Command::poisson_moment:
      break;
    case Command::cesaro_approx: {
      const auto ns = approx_n(c);
      require_grid_covers(*std::max_element(ns.begin(), ns.end()));
      find_test_function(c.function, c.alpha);
      break;
    }
    case Command::poisson_approx:
      require_grid_covers(poisson_table_degree(c));
      find_test_function(c.function, c.alpha);
      break;
    case Command::lemma1:
      if (!(c.delta < 1.0)) usage("lemma1 requires 0 < --delta < 1");
      if (c.u_count < 1) usage("--u-count must be positive");
      break;
    case Command::coeffs:
      if (!c.n_max) usage("--n-max is required");
      require_grid_covers(*c.n_max);
      find_test_function(c.function, c.alpha);
      break;
  }
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    try {
      validate(config);
    } catch (const UsageError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::string bytes = execute(config);
    if (!config.output.empty()) {
      std::ofstream out(config.output, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot open output file '" + config.output + "'");
      out << bytes;
      if (!out) throw std::runtime_error("failed writing '" + config.output + "'");
    } else {
      result.bytes = std::move(bytes);
    }
  } catch (const UsageError& e) {
    result.exit_code = 2;
    result.error = e.what();
  } catch (const std::invalid_argument& e) {
    result.exit_code = 2;
    result.error = e.what();
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.error = e.what();
  }
  return result;
}

int main_entry(int argc, const char* const* argv) {
  CLI::App app{"Hexagonal Fourier series: kernels, summability means and approximation sweeps",
               "hexfs"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "csv";
  std::vector<std::string> points;
  std::optional<int> n, n_max, grid_n;

  for (const auto& [name, cmd] : kCommands) {
    CLI::App* sub = app.add_subcommand(name, kDescriptions.at(cmd));
    sub->callback([&config, cmd = cmd] { config.command = cmd; });
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", config.output, "output path (default: standard output)");
    sub->add_flag("--timestamp", config.timestamp, "record the UTC run time in the metadata");
    switch (cmd) {
      case Command::kernel_eval:
        sub->add_option("--kernel", config.kernel, "dirichlet, theta, cesaro, poisson, poisson-series");
        sub->add_option("--n", n, "kernel degree");
        sub->add_option("--delta", config.delta, "Cesaro order");
        sub->add_option("--r", config.r_list, "Poisson radius")->expected(1);
        sub->add_option("--t", points, "evaluation point t1,t2,t3 (repeatable)");
        sub->add_option("--tol", config.tol, "series truncation tolerance");
        break;
      case Command::lebesgue:
      case Command::moment:
        sub->add_option("--delta", config.delta, "Cesaro order");
        sub->add_option("--n-max", n_max, "sweep n = 0..n_max");
        sub->add_option("--n-list", config.n_list, "explicit n values")->delimiter(',');
        sub->add_option("--grid-n", grid_n, "quadrature refinement (default 8(n+1))");
        break;
      case Command::poisson_moment:
        sub->add_option("--r", config.r_list, "radii")->delimiter(',');
        sub->add_option("--grid-n", grid_n, "quadrature refinement");
        break;
      case Command::cesaro_approx:
        sub->add_option("--function", config.function, "one, f1..f4 or phi:j1,j2,j3");
        sub->add_option("--alpha", config.alpha, "Hoelder exponent of f4");
        sub->add_option("--delta", config.delta, "Cesaro order");
        sub->add_option("--n-max", n_max, "sweep n = 0..n_max");
        sub->add_option("--n-list", config.n_list, "explicit n values")->delimiter(',');
        sub->add_option("--grid-n", grid_n, "coefficient grid refinement");
        sub->add_option("--eval-n", config.eval_n, "evaluation grid refinement");
        break;
      case Command::poisson_approx:
        sub->add_option("--function", config.function, "one, f1..f4 or phi:j1,j2,j3");
        sub->add_option("--alpha", config.alpha, "Hoelder exponent of f4");
        sub->add_option("--r", config.r_list, "radii")->delimiter(',');
        sub->add_option("--n-max", n_max, "coefficient table degree");
        sub->add_option("--grid-n", grid_n, "coefficient grid refinement");
        sub->add_option("--eval-n", config.eval_n, "evaluation grid refinement");
        sub->add_option("--tol", config.tol, "ring truncation tolerance");
        break;
      case Command::lemma1:
        sub->add_option("--delta", config.delta, "Cesaro order in (0, 1)");
        sub->add_option("--n-max", n_max, "sweep n = 0..n_max");
        sub->add_option("--n-list", config.n_list, "explicit n values")->delimiter(',');
        sub->add_option("--u-count", config.u_count, "number of u values in [0.05, pi - 0.05]");
        break;
      case Command::coeffs:
        sub->add_option("--function", config.function, "one, f1..f4 or phi:j1,j2,j3");
        sub->add_option("--alpha", config.alpha, "Hoelder exponent of f4");
        sub->add_option("--n-max", n_max, "largest ring");
        sub->add_option("--grid-n", grid_n, "sampling grid refinement (default 2(n_max+1))");
        break;
    }
  }

  try {
    app.parse(argc, argv);
    config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
    config.n = n;
    config.n_max = n_max;
    config.grid_n = grid_n;
    for (const auto& p : points) config.points.push_back(parse_point(p));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "hexfs: " << e.what() << "\n";
    return 2;
  }

  const RunResult result = run(config);
  if (result.exit_code != 0) {
    std::cerr << "hexfs: " << result.error << "\n";
    return result.exit_code;
  }
  std::cout << result.bytes;
  std::cout.flush();
  return std::cout ? 0 : 1;
}

}  // namespace hexfs::cli
