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
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdw/certify.hpp"
#include "gdw/errors.hpp"

using gdw::BoundResult;
using gdw::certify;
using gdw::certify_from_estimate;
using gdw::CertificationReport;
using gdw::ClickTally;
using gdw::estimate_asp;
using gdw::ingest_click_log;
using gdw::ParseError;
using gdw::parse_structure;
using gdw::VerdictKind;

namespace {

BoundResult make_bound(const std::string& name, double asp) {
  BoundResult result;
  result.structure = gdw::parse_structure(name);
  result.asp = asp;
  return result;
}

std::vector<BoundResult> headline_bounds() {
  return {
      make_bound("Q1024", 0.515625),
      make_bound("Q512*Q2", 0.5009803921568627),
      make_bound("Q256*Q4", 0.500654),
      make_bound("Q128*Q8", 0.500563),
      make_bound("Q32*Q32", 0.500521),
      make_bound("Q2*Q2*Q2*Q2*Q2*Q2*Q2*Q2*Q2*Q2", 0.500493),
  };
}

}  // namespace

TEST_SUITE_BEGIN("certify");

TEST_CASE("estimate from click counts") {
  ClickTally tally;
  tally.X1 = 400;
  tally.X2 = 1200;
  tally.D1 = 50;
  tally.D2 = 50;
  const auto [p_hat, sigma] = estimate_asp(tally);
  CHECK(p_hat == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(sigma == doctest::Approx(0.05).epsilon(1e-15));

  ClickTally empty;
  empty.X1 = 10;
  empty.X2 = 30;
  CHECK_THROWS_AS(estimate_asp(empty), std::invalid_argument);
}

TEST_CASE("scaling the counts shrinks sigma but not the estimate") {
  ClickTally small;
  small.D1 = 700;
  small.D2 = 300;
  ClickTally big;
  big.D1 = 7000;
  big.D2 = 3000;
  const auto [p_small, s_small] = estimate_asp(small);
  const auto [p_big, s_big] = estimate_asp(big);
  CHECK(p_small == doctest::Approx(p_big).epsilon(1e-15));
  CHECK(s_small / s_big == doctest::Approx(std::sqrt(10.0)).epsilon(1e-12));
}

TEST_CASE("headline estimate certifies a partial d=1024 bound list") {
  const auto bounds = headline_bounds();
  const CertificationReport report =
      certify_from_estimate(0.515, 0.008, 1024, bounds, 1.0);
  CHECK(report.dim == 1024);
  CHECK(report.verdict == VerdictKind::IrreducibleQuantum);
  CHECK_FALSE(report.covers_all_structures);
  CHECK(report.bounds.size() == 6);
  CHECK(report.violated_structures.size() == 5);

  CHECK(report.bounds[0].structure.render() == "Q1024");
  CHECK_FALSE(report.bounds[0].violated);
  CHECK(report.bounds[0].z_score < 0.0);

  CHECK(report.bounds[1].structure.render() == "Q512*Q2");
  CHECK(report.bounds[1].z_score == doctest::Approx(1.7525).epsilon(1e-3));
  CHECK(report.bounds[1].z_score >= 1.74);
  CHECK(report.bounds[1].z_score <= 1.76);
}

TEST_CASE("raising the threshold demotes the verdict") {
  const auto bounds = headline_bounds();
  const CertificationReport partial =
      certify_from_estimate(0.515, 0.008, 1024, bounds, 1.8);
  CHECK(partial.verdict == VerdictKind::ViolatesOnly);
  CHECK(partial.violated_structures ==
        std::vector<std::string>{"Q128*Q8", "Q32*Q32",
                                 "Q2*Q2*Q2*Q2*Q2*Q2*Q2*Q2*Q2*Q2"});
  const CertificationReport none =
      certify_from_estimate(0.515, 0.008, 1024, bounds, 2.5);
  CHECK(none.verdict == VerdictKind::Inconclusive);
  CHECK(none.violated_structures.empty());
}

TEST_CASE("live d=4 table certification from a tally") {
  const auto table = gdw::bound_table(4, gdw::StructureFilter::All);
  REQUIRE(table.size() == 5);
  ClickTally tally;
  tally.X1 = 250000;
  tally.X2 = 750000;
  tally.D1 = 74000;
  tally.D2 = 26000;
  const CertificationReport report = certify(tally, 4, table, 3.0);
  CHECK(report.p_hat == doctest::Approx(0.74).epsilon(1e-15));
  CHECK(report.verdict == VerdictKind::IrreducibleQuantum);
  CHECK(report.covers_all_structures);
  CHECK(report.violated_structures.size() == 4);
  CHECK(report.bounds[0].structure.render() == "Q4");
  CHECK_FALSE(report.bounds[0].violated);
  for (std::size_t i = 1; i < report.bounds.size(); ++i) {
    CHECK(report.bounds[i].violated);
    CHECK(report.bounds[i].z_score >= 3.0);
  }
}

TEST_CASE("an estimate sitting exactly on a bound does not violate it") {
  const auto table = gdw::bound_table(4, gdw::StructureFilter::All);
  const CertificationReport report =
      certify_from_estimate(0.625, 0.001, 4, table, 3.0);
  CHECK(report.verdict == VerdictKind::Inconclusive);
  for (const auto& check : report.bounds) {
    CHECK_FALSE(check.violated);
    CHECK(std::isfinite(check.z_score));
  }
}

TEST_CASE("zero sigma yields infinite z-scores") {
  const auto table = gdw::bound_table(4, gdw::StructureFilter::All);
  ClickTally perfect;
  perfect.X1 = 100;
  perfect.X2 = 300;
  perfect.D1 = 100;
  const CertificationReport certain = certify(perfect, 4, table, 3.0);
  CHECK(certain.sigma == 0.0);
  CHECK(certain.verdict == VerdictKind::IrreducibleQuantum);
  for (const auto& check : certain.bounds) {
    CHECK(std::isinf(check.z_score));
    CHECK(check.z_score > 0.0);
  }

  const CertificationReport hopeless =
      certify_from_estimate(0.3, 0.0, 4, table, 3.0);
  CHECK(hopeless.verdict == VerdictKind::Inconclusive);
  for (const auto& check : hopeless.bounds) {
    CHECK(check.z_score < 0.0);
  }
}

TEST_CASE("argument validation") {
  const auto bounds = headline_bounds();
  CHECK_THROWS_AS(certify_from_estimate(0.5, 0.01, 1, bounds, 3.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(certify_from_estimate(0.5, 0.01, 1024, {}, 3.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(certify_from_estimate(0.5, -0.01, 1024, bounds, 3.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(certify_from_estimate(0.5, 0.01, 512, bounds, 3.0),
                  std::invalid_argument);
}

TEST_CASE("click log ingestion validates structure and indices") {
  const std::string header = "round,x1,x2,y,j,click\n";

  {
    std::istringstream in("count,x1,x2,y,j,click\n");
    CHECK_THROWS_WITH_AS(ingest_click_log(in),
                         "header must be 'round,x1,x2,y,j,click'", ParseError);
  }
  {
    std::istringstream in(header + "1,1,2,1,1,1\n2,5,2,1,1,0\n");
    try {
      ingest_click_log(in, 4);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 3);
    }
  }
  {
    std::istringstream in(header + "1,1,2,3,1,1\n");
    CHECK_THROWS_AS(ingest_click_log(in, 4), ParseError);
  }
  {
    std::istringstream in(header + "1,1,2,1,1,2\n");
    CHECK_THROWS_AS(ingest_click_log(in, 4), ParseError);
  }
  {
    std::istringstream in(header + "1,1,x,1,1,0\n");
    CHECK_THROWS_AS(ingest_click_log(in, 4), ParseError);
  }
  {
    std::istringstream in(header + "1,1,2,1,1\n");
    CHECK_THROWS_AS(ingest_click_log(in, 4), ParseError);
  }
  {
    std::istringstream in(header + "1,0,2,1,1,0\n");
    CHECK_THROWS_AS(ingest_click_log(in, 4), ParseError);
  }
  {
    // Without a declared dimension, any positive index is accepted.
    std::istringstream in(header + "1,9999,2,1,9999,1\n");
    const ClickTally tally = ingest_click_log(in, 0);
    CHECK(tally.X1 == 1);
    CHECK(tally.D1 == 1);
  }
  {
    // CRLF endings and blank lines are tolerated.
    std::istringstream in("round,x1,x2,y,j,click\r\n1,2,3,1,2,1\r\n\n2,2,3,2,2,0\n");
    const ClickTally tally = ingest_click_log(in, 4);
    CHECK(tally.X1 == 1);
    CHECK(tally.D1 == 1);
    CHECK(tally.X2 == 1);
    CHECK(tally.D2 == 0);
  }

  CHECK_THROWS_AS(gdw::ingest_click_log_file("/nonexistent/log.csv"),
                  std::runtime_error);
}

TEST_SUITE_END();
