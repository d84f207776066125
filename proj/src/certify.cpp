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

#include "gdw/certify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <stdexcept>

#include "gdw/errors.hpp"

namespace gdw {

namespace {

bool is_full_quantum_factor(const ProductStructure& s, std::int64_t d) {
  return s.size() == 1 && s.factors()[0].dim == d &&
         s.factors()[0].kind == Kind::Quantum;
}

std::uint64_t parse_field(std::string_view field, std::size_t line,
                          const char* name) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() ||
      field.empty()) {
    throw ParseError(std::string("malformed ") + name + " field", line);
  }
  return value;
}

}  // namespace

std::pair<double, double> estimate_asp(const ClickTally& tally) {
  const double d1 = static_cast<double>(tally.D1);
  const double d2 = static_cast<double>(tally.D2);
  const double total = d1 + d2;
  if (total < 1.0) {
    throw std::invalid_argument("no clicks recorded; cannot estimate");
  }
  const double p_hat = d1 / total;
  const double sigma = std::sqrt(d1 * d2 / total) / total;
  return {p_hat, sigma};
}

CertificationReport certify_from_estimate(double p_hat, double sigma,
                                          std::int64_t d,
                                          const std::vector<BoundResult>& bounds,
                                          double sigma_threshold) {
  if (d < 2) {
    throw std::invalid_argument("dimension must be at least 2");
  }
  if (bounds.empty()) {
    throw std::invalid_argument("empty bounds list");
  }
  if (!(sigma >= 0.0)) {
    throw std::invalid_argument("sigma must be nonnegative");
  }

  CertificationReport report;
  report.dim = d;
  report.p_hat = p_hat;
  report.sigma = sigma;
  report.sigma_threshold = sigma_threshold;

  std::size_t reducible_total = 0;
  std::size_t reducible_violated = 0;
  for (const BoundResult& bound : bounds) {
    if (bound.structure.total_dim() != d) {
      throw std::invalid_argument("bound for structure " +
                                  bound.structure.render() +
                                  " does not match dimension " +
                                  std::to_string(d));
    }
    BoundCheck check;
    check.structure = bound.structure;
    check.asp = bound.asp;
    if (sigma > 0.0) {
      check.z_score = (p_hat - bound.asp) / sigma;
    } else if (p_hat > bound.asp) {
      check.z_score = std::numeric_limits<double>::infinity();
    } else if (p_hat < bound.asp) {
      check.z_score = -std::numeric_limits<double>::infinity();
    } else {
      check.z_score = 0.0;
    }
    check.violated = check.z_score >= sigma_threshold;
    if (!is_full_quantum_factor(bound.structure, d)) {
      ++reducible_total;
      if (check.violated) {
        ++reducible_violated;
        report.violated_structures.push_back(bound.structure.render());
      }
    }
    report.bounds.push_back(std::move(check));
  }

  if (reducible_total > 0 && reducible_violated == reducible_total) {
    report.verdict = VerdictKind::IrreducibleQuantum;
  } else if (reducible_violated > 0) {
    report.verdict = VerdictKind::ViolatesOnly;
  } else {
    report.verdict = VerdictKind::Inconclusive;
  }

  auto supplied = bounds;
  std::sort(supplied.begin(), supplied.end(),
            [](const BoundResult& a, const BoundResult& b) {
              return structure_less(a.structure, b.structure);
            });
  const auto all = enumerate_structures(d, StructureFilter::All);
  report.covers_all_structures =
      supplied.size() == all.size() &&
      std::equal(supplied.begin(), supplied.end(), all.begin(),
                 [](const BoundResult& a, const ProductStructure& b) {
                   return a.structure == b;
                 });
  return report;
}

CertificationReport certify(const ClickTally& tally, std::int64_t d,
                            const std::vector<BoundResult>& bounds,
                            double sigma_threshold) {
  const auto [p_hat, sigma] = estimate_asp(tally);
  return certify_from_estimate(p_hat, sigma, d, bounds, sigma_threshold);
}

ClickTally ingest_click_log(std::istream& in, std::int64_t dim) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("missing header line", 1);
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  if (line != "round,x1,x2,y,j,click") {
    throw ParseError("header must be 'round,x1,x2,y,j,click'", 1);
  }

  ClickTally tally;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    std::string_view rest = line;
    std::uint64_t fields[6];
    for (int f = 0; f < 6; ++f) {
      const std::size_t comma = rest.find(',');
      if ((f < 5) != (comma != std::string_view::npos)) {
        throw ParseError("expected 6 comma-separated fields", line_number);
      }
      const std::string_view field =
          f < 5 ? rest.substr(0, comma) : rest;
      static const char* kNames[6] = {"round", "x1", "x2", "y", "j", "click"};
      fields[f] = parse_field(field, line_number, kNames[f]);
      if (f < 5) {
        rest = rest.substr(comma + 1);
      }
    }
    const std::uint64_t x1 = fields[1], x2 = fields[2], y = fields[3],
                        j = fields[4], click = fields[5];
    if (y != 1 && y != 2) {
      throw ParseError("y must be 1 or 2", line_number);
    }
    if (click > 1) {
      throw ParseError("click must be 0 or 1", line_number);
    }
    if (x1 < 1 || x2 < 1 || j < 1) {
      throw ParseError("indices are 1-based", line_number);
    }
    if (dim > 0) {
      const auto limit = static_cast<std::uint64_t>(dim);
      if (x1 > limit || x2 > limit || j > limit) {
        throw ParseError("index exceeds the declared dimension", line_number);
      }
    }
    const bool hit = y == 1 ? j == x1 : j == x2;
    if (hit) {
      ++tally.X1;
      tally.D1 += click;
    } else {
      ++tally.X2;
      tally.D2 += click;
    }
  }
  return tally;
}

ClickTally ingest_click_log_file(const std::string& path, std::int64_t dim) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open click log: " + path);
  }
  return ingest_click_log(in, dim);
}

}  // namespace gdw
