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

#ifndef GDW_JSON_IO_HPP
#define GDW_JSON_IO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gdw/bound_solver.hpp"
#include "gdw/certify.hpp"
#include "gdw/qrac_sim.hpp"

namespace gdw {

// Provenance block embedded in every JSON output.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::string tool_version;
  std::uint64_t seed = 0;
  std::string timestamp_utc;

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

// Stamps tool version and current UTC time.
RunManifest make_manifest(const std::string& command,
                          std::map<std::string, std::string> parameters,
                          std::uint64_t seed);

nlohmann::json manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::json& j);

nlohmann::json bound_result_to_json(const BoundResult& result);
BoundResult bound_result_from_json(const nlohmann::json& j);

nlohmann::json bounds_to_json(std::int64_t dim,
                              const std::vector<BoundResult>& results,
                              const RunManifest& manifest);
// Reads back a bounds document; when dim_out is non-null it receives the
// document's dimension.
std::vector<BoundResult> bounds_from_json(const nlohmann::json& j,
                                          std::int64_t* dim_out = nullptr);

nlohmann::json tally_to_json(const ClickTally& tally);
ClickTally tally_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const CertificationReport& report,
                              const RunManifest& manifest);

}  // namespace gdw

#endif  // GDW_JSON_IO_HPP
