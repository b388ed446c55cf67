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

#include "hexfs/report_io.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace hexfs {

namespace {

using ojson = nlohmann::ordered_json;

ojson number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round12(v);
}

double read_number(const ojson& v, const char* key) {
  if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (!v.is_number()) {
    throw std::invalid_argument(std::string("report_from_json: field '") + key + "' is not a number");
  }
  return v.get<double>();
}

std::string triple_key(const HexIndex& j) {
  return std::to_string(j.j1()) + "," + std::to_string(j.j2()) + "," + std::to_string(j.j3());
}

void write_metadata_lines(std::string& out, const std::map<std::string, std::string>& metadata) {
  for (const auto& [k, v] : metadata) out += "# " + k + "=" + v + "\n";
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_real(v).c_str(), nullptr);
}

std::string report_to_csv(const ExperimentReport& report) {
  std::string out;
  write_metadata_lines(out, report.metadata);
  out += report.param_name;
  if (!report.param2_name.empty()) out += "," + report.param2_name;
  out += "," + report.measured_name + ",bound,ratio\n";
  for (const auto& row : report.rows) {
    out += format_real(row.param);
    if (!report.param2_name.empty()) out += "," + format_real(row.param2.value_or(0.0));
    out += "," + format_real(row.measured) + "," + format_real(row.bound) + "," +
           format_real(row.ratio) + "\n";
  }
  return out;
}

std::string report_to_json(const ExperimentReport& report) {
  ojson meta = ojson::object();
  auto with_names = report.metadata;
  with_names["param_name"] = report.param_name;
  with_names["measured_name"] = report.measured_name;
  if (!report.param2_name.empty()) with_names["param2_name"] = report.param2_name;
  for (const auto& [k, v] : with_names) meta[k] = v;

  ojson rows = ojson::array();
  for (const auto& row : report.rows) {
    ojson r = ojson::object();
    r["param"] = number(row.param);
    if (row.param2) r["param2"] = number(*row.param2);
    r["measured"] = number(row.measured);
    r["bound"] = number(row.bound);
    r["ratio"] = number(row.ratio);
    rows.push_back(std::move(r));
  }
  ojson doc = ojson::object();
  doc["metadata"] = std::move(meta);
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

ExperimentReport report_from_json(const std::string& text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("report_from_json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("metadata") || !doc.contains("rows") ||
      !doc["metadata"].is_object() || !doc["rows"].is_array()) {
    throw std::invalid_argument("report_from_json: expected {\"metadata\": {...}, \"rows\": [...]}");
  }
  ExperimentReport report;
  for (const auto& [k, v] : doc["metadata"].items()) {
    if (!v.is_string()) throw std::invalid_argument("report_from_json: metadata values must be strings");
    const std::string s = v.get<std::string>();
    if (k == "param_name") {
      report.param_name = s;
    } else if (k == "measured_name") {
      report.measured_name = s;
    } else if (k == "param2_name") {
      report.param2_name = s;
    } else {
      report.metadata[k] = s;
    }
  }
  for (const auto& r : doc["rows"]) {
    if (!r.is_object()) throw std::invalid_argument("report_from_json: rows must be objects");
    for (const char* key : {"param", "measured", "bound", "ratio"}) {
      if (!r.contains(key)) {
        throw std::invalid_argument(std::string("report_from_json: row without '") + key + "'");
      }
    }
    ReportRow row;
    row.param = read_number(r["param"], "param");
    if (r.contains("param2")) row.param2 = read_number(r["param2"], "param2");
    row.measured = read_number(r["measured"], "measured");
    row.bound = read_number(r["bound"], "bound");
    row.ratio = read_number(r["ratio"], "ratio");
    report.rows.push_back(row);
  }
  return report;
}

std::string coefficients_to_csv(const CoefficientTable& table,
                                const std::map<std::string, std::string>& metadata) {
  std::string out;
  write_metadata_lines(out, metadata);
  out += "j1,j2,j3,re,im\n";
  for (const HexIndex& j : table.indices()) {
    const auto c = table.at(j);
    out += triple_key(j) + "," + format_real(c.real()) + "," + format_real(c.imag()) + "\n";
  }
  return out;
}

std::string coefficients_to_json(const CoefficientTable& table,
                                 const std::map<std::string, std::string>& metadata) {
  ojson meta = ojson::object();
  for (const auto& [k, v] : metadata) meta[k] = v;
  ojson coeffs = ojson::object();
  for (const HexIndex& j : table.indices()) {
    const auto c = table.at(j);
    coeffs[triple_key(j)] = ojson::array({number(c.real()), number(c.imag())});
  }
  ojson doc = ojson::object();
  doc["metadata"] = std::move(meta);
  doc["coefficients"] = std::move(coeffs);
  return doc.dump(2) + "\n";
}

}  // namespace hexfs
