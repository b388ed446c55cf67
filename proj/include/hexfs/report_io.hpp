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

// Text serialization of reports and coefficient tables.
//
// CSV: metadata as "# key=value" lines (sorted by key), then the header
//   <param>[,<param2>],<measured>,bound,ratio
// and one line per row. JSON:
//   {"metadata": {...}, "rows": [{"param": ..., "measured": ..., "bound": ..., "ratio": ...}]}
// with column names kept in metadata under param_name / param2_name / measured_name.
// Numbers carry 12 significant digits; NaN is "nan" in CSV and null in JSON.

#include <string>

#include "hexfs/analysis.hpp"
#include "hexfs/means.hpp"

namespace hexfs {

std::string report_to_csv(const ExperimentReport& report);
std::string report_to_json(const ExperimentReport& report);

/// Inverse of report_to_json. Throws std::invalid_argument on malformed input.
ExperimentReport report_from_json(const std::string& text);

/// Rows j1,j2,j3,re,im in index-set order.
std::string coefficients_to_csv(const CoefficientTable& table,
                                const std::map<std::string, std::string>& metadata);

/// {"metadata": {...}, "coefficients": {"j1,j2,j3": [re, im], ...}} in index-set order.
std::string coefficients_to_json(const CoefficientTable& table,
                                 const std::map<std::string, std::string>& metadata);

/// Value rounded to 12 significant digits (the serialized value).
double round12(double v);

}  // namespace hexfs
