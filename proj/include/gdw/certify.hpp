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

#ifndef GDW_CERTIFY_HPP
#define GDW_CERTIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gdw/bound_solver.hpp"
#include "gdw/qrac_sim.hpp"

namespace gdw {

// (p_hat, sigma) from click counts: p_hat = D1/(D1+D2) and sigma the
// Poisson-propagated standard error sqrt(D1*D2/(D1+D2)) / (D1+D2).
// Requires D1 + D2 >= 1.
std::pair<double, double> estimate_asp(const ClickTally& tally);

enum class VerdictKind { IrreducibleQuantum, ViolatesOnly, Inconclusive };

struct BoundCheck {
  ProductStructure structure;
  double asp = 0.0;
  double z_score = 0.0;
  bool violated = false;
};

struct CertificationReport {
  std::int64_t dim = 0;
  double p_hat = 0.0;
  double sigma = 0.0;
  double sigma_threshold = 3.0;
  // One row per supplied bound, in the supplied order.
  std::vector<BoundCheck> bounds;
  VerdictKind verdict = VerdictKind::Inconclusive;
  // Rendered names of the violated non-full-dimension structures.
  std::vector<std::string> violated_structures;
  // True when the supplied bounds cover every structure of dimension dim.
  bool covers_all_structures = false;
};

// Compares the estimate against every bound: a bound is violated when
// (p_hat - asp)/sigma >= sigma_threshold. Verdict is IrreducibleQuantum when
// every bound other than the single fully-quantum factor Qd is violated (and
// at least one such bound was supplied), ViolatesOnly when some but not all
// are, Inconclusive otherwise.
CertificationReport certify_from_estimate(double p_hat, double sigma,
                                          std::int64_t d,
                                          const std::vector<BoundResult>& bounds,
                                          double sigma_threshold = 3.0);

CertificationReport certify(const ClickTally& tally, std::int64_t d,
                            const std::vector<BoundResult>& bounds,
                            double sigma_threshold = 3.0);

// Reads a click log written by the simulator: header "round,x1,x2,y,j,click"
// then one CSV row per round. Rounds with j equal to the queried input count
// toward X1/D1, the rest toward X2/D2. When dim > 0, indices above dim are
// rejected. Errors carry the 1-based line number. Memory use is constant in
// the number of rows.
ClickTally ingest_click_log(std::istream& in, std::int64_t dim = 0);
ClickTally ingest_click_log_file(const std::string& path, std::int64_t dim = 0);

}  // namespace gdw

#endif  // GDW_CERTIFY_HPP
