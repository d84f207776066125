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

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gdw/certify.hpp"
#include "gdw/qrac_sim.hpp"

using gdw::ClickTally;
using gdw::expected_click_rates;
using gdw::fom_closed_form;
using gdw::fom_first_order;
using gdw::SimConfig;
using gdw::simulate;

namespace {

double binomial_sigma(double p, double n) {
  return std::sqrt(p * (1.0 - p) / n);
}

}  // namespace

TEST_SUITE_BEGIN("qrac_sim");

TEST_CASE("configuration validation") {
  SimConfig config;
  config.validate();
  SimConfig bad = config;
  bad.k = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = config;
  bad.k = 8;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = config;
  bad.mu = -0.1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = config;
  bad.nu = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = config;
  bad.nu = -0.01;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = config;
  bad.visibility = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = config;
  bad.visibility = 1.01;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = config;
  bad.rounds = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("tally is reproducible and independent of the worker count") {
  SimConfig config;
  config.k = 1;
  config.rounds = 100000;
  config.seed = 99;
  const ClickTally first = simulate(config);
  const ClickTally second = simulate(config);
  CHECK(first == second);

  REQUIRE(setenv("GDW_THREADS", "1", 1) == 0);
  const ClickTally serial = simulate(config);
  REQUIRE(setenv("GDW_THREADS", "4", 1) == 0);
  const ClickTally parallel = simulate(config);
  REQUIRE(unsetenv("GDW_THREADS") == 0);
  CHECK(serial == parallel);
  CHECK(first == serial);
}

TEST_CASE("basic tally invariants and uniform question column") {
  SimConfig config;
  config.k = 1;
  config.rounds = 200000;
  config.seed = 5;
  const ClickTally tally = simulate(config);
  CHECK(tally.X1 + tally.X2 == config.rounds);
  CHECK(tally.D1 <= tally.X1);
  CHECK(tally.D2 <= tally.X2);
  const double frac = static_cast<double>(tally.X1) / config.rounds;
  CHECK(std::abs(frac - 0.25) <=
        4.0 * binomial_sigma(0.25, static_cast<double>(config.rounds)));
}

TEST_CASE("click rates match the Poissonian closed forms") {
  SimConfig config;
  config.k = 1;
  config.mu = 0.4;
  config.nu = 0.13;
  config.rounds = 2000000;
  config.seed = 20260817;
  const ClickTally tally = simulate(config);

  const double q = 0.5 * (1.0 + 0.5);
  const auto [rate1, rate2] = expected_click_rates(q, 4, config.mu * config.nu);
  const double hit_rate = static_cast<double>(tally.D1) / tally.X1;
  const double miss_rate = static_cast<double>(tally.D2) / tally.X2;
  CHECK(std::abs(hit_rate - rate1) <=
        4.0 * binomial_sigma(rate1, static_cast<double>(tally.X1)));
  CHECK(std::abs(miss_rate - rate2) <=
        4.0 * binomial_sigma(rate2, static_cast<double>(tally.X2)));

  const auto [p_hat, sigma] = gdw::estimate_asp(tally);
  CHECK(std::abs(p_hat - fom_closed_form(q, 4, config.mu * config.nu)) <=
        4.0 * sigma);
}

TEST_CASE("photon sampling mode agrees with the aggregate path") {
  SimConfig config;
  config.k = 1;
  config.mu = 0.4;
  config.nu = 0.13;
  config.rounds = 400000;
  config.seed = 31;
  config.sample_photons = true;
  const ClickTally tally = simulate(config);
  CHECK(simulate(config) == tally);

  const double q = 0.75;
  const auto [rate1, rate2] = expected_click_rates(q, 4, config.mu * config.nu);
  const double hit_rate = static_cast<double>(tally.D1) / tally.X1;
  const double miss_rate = static_cast<double>(tally.D2) / tally.X2;
  CHECK(std::abs(hit_rate - rate1) <=
        4.0 * binomial_sigma(rate1, static_cast<double>(tally.X1)));
  CHECK(std::abs(miss_rate - rate2) <=
        4.0 * binomial_sigma(rate2, static_cast<double>(tally.X2)));
}

TEST_CASE("a saturated detector drives the click fraction to 1/d") {
  SimConfig config;
  config.k = 1;
  config.mu = 1e6;
  config.nu = 1.0;
  config.rounds = 50000;
  config.seed = 2;
  const ClickTally tally = simulate(config);
  CHECK(tally.D1 == tally.X1);
  CHECK(tally.D2 == tally.X2);
  const auto [p_hat, sigma] = gdw::estimate_asp(tally);
  CHECK(std::abs(p_hat - 0.25) <= 5.0 * sigma);
  CHECK(fom_closed_form(0.75, 4, 1e9) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("reduced visibility depolarizes toward the uniform overlap") {
  SimConfig config;
  config.k = 1;
  config.mu = 0.4;
  config.nu = 0.13;
  config.visibility = 0.6;
  config.rounds = 2000000;
  config.seed = 77;
  const ClickTally tally = simulate(config);
  const double q_eff = 0.6 * 0.75 + 0.4 * 0.25;
  const auto [p_hat, sigma] = gdw::estimate_asp(tally);
  CHECK(std::abs(p_hat - fom_closed_form(q_eff, 4, config.mu * config.nu)) <=
        4.0 * sigma);
  CHECK(fom_closed_form(q_eff, 4, 0.052) < fom_closed_form(0.75, 4, 0.052));
}

TEST_CASE("closed-form figure of merit and its expansion") {
  const double q = 0.515625;
  CHECK(fom_first_order(q, 1024, 0.052) ==
        doctest::Approx(0.51227978515625).epsilon(1e-12));
  CHECK(std::abs(fom_closed_form(q, 1024, 0.052) -
                 fom_first_order(q, 1024, 0.052)) <= 1e-4);
  CHECK(fom_closed_form(q, 1024, 1e-12) ==
        doctest::Approx(fom_first_order(q, 1024, 1e-12)).epsilon(1e-15));

  const auto [rate1, rate2] = expected_click_rates(0.75, 4, 0.052);
  CHECK(rate1 == doctest::Approx(-std::expm1(-0.052 * 0.75)).epsilon(1e-15));
  CHECK(rate2 ==
        doctest::Approx(-std::expm1(-0.052 * 0.25 / 3.0)).epsilon(1e-15));

  // With no attenuation at all the figure of merit reduces to the overlap.
  CHECK(fom_first_order(0.75, 4, 0.0) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("click log round-trips through ingestion") {
  SimConfig config;
  config.k = 1;
  config.rounds = 500;
  config.seed = 123;
  std::ostringstream log;
  const ClickTally tally = simulate(config, &log);
  const std::string text = log.str();
  CHECK(text.rfind("round,x1,x2,y,j,click\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : text) {
    lines += (c == '\n') ? 1 : 0;
  }
  CHECK(lines == config.rounds + 1);

  std::istringstream in(text);
  const ClickTally ingested = gdw::ingest_click_log(in, 4);
  CHECK(ingested == tally);

  // Logged and unlogged runs with the same seed produce the same tally.
  CHECK(simulate(config) == tally);
}

TEST_SUITE_END();
