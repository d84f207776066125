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

#ifndef GDW_ORACLES_HPP
#define GDW_ORACLES_HPP

#include <cstdint>
#include <string>

#include "gdw/product_structure.hpp"

namespace gdw {

// Slow, independently coded reference computations used to anchor the
// analytic formulas and the solver.

struct OracleReport {
  std::string name;
  std::string instance;
  double oracle_value = 0.0;
  double analytic_value = 0.0;
  double abs_diff = 0.0;
};

// Best classical average success probability for encoding two dits of
// dimension d into one classical dit, by exhausting all d^(d*d) encodings
// with the optimal decoder for each (or the identity decoder when
// identity_decoding is set). Supported for d in {2, 3}.
double classical_rac_exhaustive(int d, bool identity_decoding = false);

// Sweeps explicit interpolated encodings and reports the largest deviation
// between the achieved success pair (z, w) and the analytic quantum curve
// w = tradeoff_q(d, z). Powers of 4 up to 4^7 use the tensor-power basis
// pair; other dimensions use two real unit vectors at angle acos(1/sqrt(d)),
// which realizes the same curve. oracle_value is the max deviation,
// analytic_value 0. resolution >= 1000 sweep points.
OracleReport tradeoff_grid_check(std::int64_t d, int resolution);

// Dense grid evaluation of the two-factor objective, (resolution+1)^2 points
// over the box. Independent of the compass search; within O(grid step^2) of
// the true bound.
double two_factor_grid_bound(const ProductStructure& structure, int resolution);

}  // namespace gdw

#endif  // GDW_ORACLES_HPP
