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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hexfs/hexcoord.hpp"

namespace hexfs::cli {

enum class Command {
  kernel_eval,
  lebesgue,
  moment,
  poisson_moment,
  cesaro_approx,
  poisson_approx,
  lemma1,
  coeffs
};

enum class OutputFormat { csv, json };

std::string_view command_name(Command c);

struct RunConfig {
  Command command = Command::kernel_eval;
  std::string kernel = "dirichlet";  // dirichlet | theta | cesaro | poisson | poisson-series
  std::optional<int> n;
  std::optional<int> n_max;
  std::vector<int> n_list;
  double delta = 1.0;
  std::vector<double> r_list;
  std::optional<int> grid_n;
  int eval_n = 64;
  std::string function = "f3";
  double alpha = 0.5;
  double tol = 1e-10;
  int u_count = 20;
  std::vector<HomogeneousPoint> points;
  OutputFormat format = OutputFormat::csv;
  std::string output;  // empty: return bytes for standard output
  bool timestamp = false;
};

struct RunResult {
  int exit_code = 0;
  std::string bytes;  // report text (empty on failure or when written to a file)
  std::string error;
};

/// Flag or validation error; maps to exit status 2.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// "t1,t2,t3" with |t1 + t2 + t3| <= 1e-9. Throws UsageError.
HomogeneousPoint parse_point(std::string_view text);

/// Checks command-specific requirements before any computation. Throws UsageError.
void validate(const RunConfig& config);

/// Exit status 0 on success, 1 on numerical failure (for example r >= 1), 2 on
/// invalid configuration.
RunResult run(const RunConfig& config);

/// Parses argv, runs, and writes the report to standard output (or --output).
int main_entry(int argc, const char* const* argv);

}  // namespace hexfs::cli
