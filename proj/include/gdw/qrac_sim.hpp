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

#ifndef GDW_QRAC_SIM_HPP
#define GDW_QRAC_SIM_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>

namespace gdw {

// Single-detector random access code experiment in dimension 4^k with a
// Poissonian light source: each round draws inputs (x1, x2) and a question
// y uniformly, prepares the optimal two-basis encoding attenuated to mean
// photon number mu, and projects onto one uniformly drawn basis column j of
// basis y with detector efficiency nu. Only the click/no-click outcome is
// recorded; rounds where j equals the queried input feed X1/D1 (trials and
// clicks), all others feed X2/D2.
struct SimConfig {
  int k = 1;
  double mu = 0.4;
  // Detector efficiency in [0, 1].
  double nu = 0.13;
  // Interferometric visibility in (0, 1]: overlaps q are depolarized to
  // v*q + (1-v)/dim before detection.
  double visibility = 1.0;
  std::uint64_t rounds = 1;
  std::uint64_t seed = 0;
  // Draw an explicit photon count per round and thin it photon by photon
  // instead of using the aggregate click probability. Slower; meant for
  // cross-checking the aggregate path.
  bool sample_photons = false;

  void validate() const;
};

struct ClickTally {
  std::uint64_t X1 = 0;  // rounds asking the queried input's own column
  std::uint64_t X2 = 0;  // all other rounds
  std::uint64_t D1 = 0;  // clicks within X1
  std::uint64_t D2 = 0;  // clicks within X2

  friend bool operator==(const ClickTally&, const ClickTally&) = default;
};

// Runs the experiment. Randomness is counter-based on (seed, round), so the
// tally is identical for any worker count. When click_log is given, rounds
// run sequentially and each appends a CSV row "round,x1,x2,y,j,click"
// (1-based round numbers) after a fixed header.
ClickTally simulate(const SimConfig& config, std::ostream* click_log = nullptr);

// Click rates (rate1, rate2) for a hit / miss round: 1 - exp(-nu_mu * q) with
// q the hit overlap resp. the uniform miss overlap (1-q)/(d-1).
std::pair<double, double> expected_click_rates(double q, std::int64_t d,
                                               double nu_mu);

// Expected fraction of clicks that land in D1 when the hit overlap is q:
//   (1 - exp(-nu_mu*q)) / ((1 - exp(-nu_mu*q)) + (d-1)*(1 - exp(-nu_mu*(1-q)/(d-1))))
// Below nu_mu = 1e-9 the exponentials are replaced by their expansion to
// avoid 0/0 cancellation.
double fom_closed_form(double q, std::int64_t d, double nu_mu);

// First-order expansion of fom_closed_form in nu_mu:
//   q - ((1-q)/(d-1)) * q * (d*q - 1) * nu_mu / 2.
double fom_first_order(double q, std::int64_t d, double nu_mu);

}  // namespace gdw

#endif  // GDW_QRAC_SIM_HPP
