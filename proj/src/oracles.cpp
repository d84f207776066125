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

#include "gdw/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gdw/bound_solver.hpp"
#include "gdw/mub_encoding.hpp"
#include "gdw/parallel.hpp"
#include "gdw/tradeoff.hpp"

namespace gdw {

namespace {

std::uint64_t int_pow(std::uint64_t base, int exponent) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    out *= base;
  }
  return out;
}

// Best success count for one encoding function, decoding each message to its
// most frequent answer (or to itself when identity is set).
int best_count_for_encoding(std::uint64_t code, int d, bool identity) {
  int cnt1[3][3] = {};
  int cnt2[3][3] = {};
  for (int x1 = 0; x1 < d; ++x1) {
    for (int x2 = 0; x2 < d; ++x2) {
      const int message = static_cast<int>(code % d);
      code /= d;
      ++cnt1[message][x1];
      ++cnt2[message][x2];
    }
  }
  int total = 0;
  for (int m = 0; m < d; ++m) {
    if (identity) {
      total += cnt1[m][m] + cnt2[m][m];
    } else {
      total += *std::max_element(cnt1[m], cnt1[m] + d);
      total += *std::max_element(cnt2[m], cnt2[m] + d);
    }
  }
  return total;
}

int floor_log4_exponent(std::int64_t d) {
  int k = 0;
  std::int64_t v = 1;
  while (v < d && k < 8) {
    v *= 4;
    ++k;
  }
  return v == d ? k : 0;
}

}  // namespace

double classical_rac_exhaustive(int d, bool identity_decoding) {
  if (d != 2 && d != 3) {
    throw std::invalid_argument("exhaustive search supports d in {2, 3}");
  }
  const std::uint64_t encodings = int_pow(static_cast<std::uint64_t>(d), d * d);
  std::vector<int> block_best(static_cast<std::size_t>(worker_count()) * 4, 0);
  const std::uint64_t blocks = std::min<std::uint64_t>(block_best.size(), encodings);
  const std::uint64_t per_block = (encodings + blocks - 1) / blocks;
  parallel_for(static_cast<std::size_t>(blocks),
               [&](std::size_t begin, std::size_t end) {
                 for (std::size_t b = begin; b < end; ++b) {
                   const std::uint64_t lo = b * per_block;
                   const std::uint64_t hi =
                       std::min(lo + per_block, encodings);
                   int best = 0;
                   for (std::uint64_t code = lo; code < hi; ++code) {
                     best = std::max(
                         best, best_count_for_encoding(code, d, identity_decoding));
                   }
                   block_best[b] = best;
                 }
               });
  const int best = *std::max_element(block_best.begin(), block_best.end());
  return static_cast<double>(best) / (2.0 * d * d);
}

OracleReport tradeoff_grid_check(std::int64_t d, int resolution) {
  if (d < 2) {
    throw std::invalid_argument("dimension must be at least 2");
  }
  if (resolution < 1000) {
    throw std::invalid_argument("resolution must be at least 1000");
  }

  double max_deviation = 0.0;
  const int k = floor_log4_exponent(d);
  if (k >= 1 && k <= 7) {
    const MubPair mubs = build_mub(k);
    for (int i = 0; i <= resolution; ++i) {
      const double t = static_cast<double>(i) / resolution;
      const EncodedState state = curve_state(mubs, 1, 2, t);
      const double z = measurement_overlap(mubs, 1, 1, state);
      const double w = measurement_overlap(mubs, 2, 2, state);
      max_deviation = std::max(max_deviation, std::abs(w - tradeoff_q(d, z)));
    }
  } else {
    // Two real unit vectors at angle acos(1/sqrt(d)) realize the same curve:
    // sweep their normalized convex combinations.
    const double c = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i <= resolution; ++i) {
      const double t = static_cast<double>(i) / resolution;
      const double u = 1.0 - t;
      const double norm_sq = t * t + u * u + 2.0 * t * u * c;
      const double z = (t + u * c) * (t + u * c) / norm_sq;
      const double w = (t * c + u) * (t * c + u) / norm_sq;
      max_deviation = std::max(max_deviation, std::abs(w - tradeoff_q(d, z)));
    }
  }

  OracleReport report;
  report.name = "tradeoff-curve";
  report.instance =
      "d=" + std::to_string(d) + " resolution=" + std::to_string(resolution);
  report.oracle_value = max_deviation;
  report.analytic_value = 0.0;
  report.abs_diff = max_deviation;
  return report;
}

double two_factor_grid_bound(const ProductStructure& structure,
                             int resolution) {
  if (structure.size() != 2) {
    throw std::invalid_argument("grid bound needs exactly two factors");
  }
  if (resolution < 1) {
    throw std::invalid_argument("resolution must be positive");
  }
  const Factor& f1 = structure.factors()[0];
  const Factor& f2 = structure.factors()[1];
  const double lo1 = 1.0 / static_cast<double>(f1.dim);
  const double lo2 = 1.0 / static_cast<double>(f2.dim);

  // Second-factor curve values are shared across every row of the grid.
  std::vector<double> z2(static_cast<std::size_t>(resolution) + 1);
  std::vector<double> m2(z2.size());
  for (std::size_t j = 0; j < z2.size(); ++j) {
    const double frac = static_cast<double>(j) / resolution;
    z2[j] = lo2 + (1.0 - lo2) * frac;
    m2[j] = f2.kind == Kind::Quantum ? tradeoff_q(f2.dim, z2[j])
                                     : tradeoff_c(f2.dim, z2[j]);
  }

  std::vector<double> row_best(static_cast<std::size_t>(resolution) + 1, 0.0);
  parallel_for(row_best.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double frac = static_cast<double>(i) / resolution;
      const double z1 = lo1 + (1.0 - lo1) * frac;
      const double m1 = f1.kind == Kind::Quantum ? tradeoff_q(f1.dim, z1)
                                                 : tradeoff_c(f1.dim, z1);
      double best = 0.0;
      for (std::size_t j = 0; j < z2.size(); ++j) {
        best = std::max(best, 0.5 * (z1 * z2[j] + m1 * m2[j]));
      }
      row_best[i] = best;
    }
  });
  return *std::max_element(row_best.begin(), row_best.end());
}

}  // namespace gdw
