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

#ifndef GDW_BOUND_SOLVER_HPP
#define GDW_BOUND_SOLVER_HPP

#include <cstdint>
#include <vector>

#include "gdw/product_structure.hpp"

namespace gdw {

struct SolverConfig {
  // Local searches stop once the poll step is below this fraction of each
  // box width.
  double box_tolerance = 1e-10;
  // Results within this window of the best objective count as ties when the
  // reported argmax is canonicalized.
  double objective_tolerance = 1e-12;
  // Start points per variable on the deterministic grid (low edge, symmetric
  // point, high edge when 3).
  int multistart_grid = 3;
  // Additional low-discrepancy start points derived from `seed`.
  int random_starts = 64;
  std::uint64_t seed = 0;

  void validate() const;
};

enum class SolveStatus { Converged, MaxIterations };

struct BoundResult {
  ProductStructure structure;
  // Best average success probability found for this structure.
  double asp = 0.0;
  // Per-factor first-dit success probabilities achieving asp. When several
  // near-ties exist this is the lexicographically smallest one.
  std::vector<double> argmax;
  int starts_used = 0;
  SolveStatus status = SolveStatus::Converged;
};

// Average success probability of the strategy described by z: the mean of
// prod_k z_k and prod_k curve_k(z_k), where curve_k is the quantum or
// classical trade-off of factor k. Each z_k must lie in [1/dim_k, 1] (the
// usual 1e-12 clamp slop applies).
double objective(const ProductStructure& structure,
                 const std::vector<double>& z);

// Maximizes the objective over the box. Single factors use the closed form;
// otherwise a deterministic multistart compass search runs: grid starts plus
// seeded low-discrepancy starts, each polled coordinate-wise with the step
// halving after every failed poll, from a quarter of the box width down to
// box_tolerance. Results are identical for any worker count.
BoundResult solve_bound(const ProductStructure& structure,
                        const SolverConfig& config = {});

// solve_bound for every enumerated structure, sorted by asp descending with
// ties in enumeration order.
std::vector<BoundResult> bound_table(std::int64_t d, StructureFilter filter,
                                     const SolverConfig& config = {});

}  // namespace gdw

#endif  // GDW_BOUND_SOLVER_HPP
