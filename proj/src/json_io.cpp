// Copyright 2026 The gdw authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gdw/json_io.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <stdexcept>

#include "gdw/version.hpp"

namespace gdw {

namespace {

std::string utc_now() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm_utc;
  gmtime_r(&now, &tm_utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buffer;
}

std::string status_name(SolveStatus status) {
  return status == SolveStatus::Converged ? "Converged" : "MaxIterations";
}

SolveStatus status_from_name(const std::string& name) {
  if (name == "Converged") {
    return SolveStatus::Converged;
  }
  if (name == "MaxIterations") {
    return SolveStatus::MaxIterations;
  }
  throw std::invalid_argument("unknown solve status: " + name);
}

std::string verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::IrreducibleQuantum:
      return "IrreducibleQuantum";
    case VerdictKind::ViolatesOnly:
      return "ViolatesOnly";
    default:
      return "Inconclusive";
  }
}

}  // namespace

RunManifest make_manifest(const std::string& command,
                          std::map<std::string, std::string> parameters,
                          std::uint64_t seed) {
  RunManifest manifest;
  manifest.command = command;
  manifest.parameters = std::move(parameters);
  manifest.tool_version = kToolVersion;
  manifest.seed = seed;
  manifest.timestamp_utc = utc_now();
  return manifest;
}

nlohmann::json manifest_to_json(const RunManifest& manifest) {
  return {
      {"command", manifest.command},
      {"parameters", manifest.parameters},
      {"tool_version", manifest.tool_version},
      {"seed", manifest.seed},
      {"timestamp", manifest.timestamp_utc},
  };
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  RunManifest manifest;
  manifest.command = j.at("command").get<std::string>();
  manifest.parameters =
      j.at("parameters").get<std::map<std::string, std::string>>();
  manifest.tool_version = j.at("tool_version").get<std::string>();
  manifest.seed = j.at("seed").get<std::uint64_t>();
  manifest.timestamp_utc = j.at("timestamp").get<std::string>();
  return manifest;
}

nlohmann::json bound_result_to_json(const BoundResult& result) {
  return {
      {"structure", result.structure.render()},
      {"asp", result.asp},
      {"argmax", result.argmax},
      {"starts_used", result.starts_used},
      {"status", status_name(result.status)},
  };
}

BoundResult bound_result_from_json(const nlohmann::json& j) {
  BoundResult result;
  result.structure = parse_structure(j.at("structure").get<std::string>());
  result.asp = j.at("asp").get<double>();
  result.argmax = j.at("argmax").get<std::vector<double>>();
  result.starts_used = j.value("starts_used", 0);
  result.status = status_from_name(j.value("status", "Converged"));
  return result;
}

nlohmann::json bounds_to_json(std::int64_t dim,
                              const std::vector<BoundResult>& results,
                              const RunManifest& manifest) {
  nlohmann::json rows = nlohmann::json::array();
  for (const BoundResult& result : results) {
    rows.push_back(bound_result_to_json(result));
  }
  return {
      {"manifest", manifest_to_json(manifest)},
      {"dim", dim},
      {"results", std::move(rows)},
  };
}

std::vector<BoundResult> bounds_from_json(const nlohmann::json& j,
                                          std::int64_t* dim_out) {
  if (dim_out != nullptr) {
    *dim_out = j.at("dim").get<std::int64_t>();
  }
  std::vector<BoundResult> results;
  for (const nlohmann::json& row : j.at("results")) {
    results.push_back(bound_result_from_json(row));
  }
  return results;
}

nlohmann::json tally_to_json(const ClickTally& tally) {
  return {
      {"X1", tally.X1},
      {"X2", tally.X2},
      {"D1", tally.D1},
      {"D2", tally.D2},
  };
}

ClickTally tally_from_json(const nlohmann::json& j) {
  ClickTally tally;
  tally.X1 = j.at("X1").get<std::uint64_t>();
  tally.X2 = j.at("X2").get<std::uint64_t>();
  tally.D1 = j.at("D1").get<std::uint64_t>();
  tally.D2 = j.at("D2").get<std::uint64_t>();
  return tally;
}

nlohmann::json report_to_json(const CertificationReport& report,
                              const RunManifest& manifest) {
  nlohmann::json rows = nlohmann::json::array();
  for (const BoundCheck& check : report.bounds) {
    // JSON has no infinities; degenerate sigma = 0 rows are clamped.
    const double z_score = std::isfinite(check.z_score)
                               ? check.z_score
                               : std::copysign(1e300, check.z_score);
    rows.push_back({
        {"structure", check.structure.render()},
        {"asp", check.asp},
        {"z_score", z_score},
        {"violated", check.violated},
    });
  }
  nlohmann::json verdict = {
      {"kind", verdict_name(report.verdict)},
  };
  if (report.verdict == VerdictKind::IrreducibleQuantum) {
    verdict["dim"] = report.dim;
  }
  if (report.verdict == VerdictKind::ViolatesOnly) {
    verdict["violated"] = report.violated_structures;
  }
  return {
      {"manifest", manifest_to_json(manifest)},
      {"dim", report.dim},
      {"p_hat", report.p_hat},
      {"sigma", report.sigma},
      {"sigma_threshold", report.sigma_threshold},
      {"covers_all_structures", report.covers_all_structures},
      {"bounds", std::move(rows)},
      {"verdict", std::move(verdict)},
  };
}

}  // namespace gdw
