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

#include "gdw/bound_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gdw/parallel.hpp"
#include "gdw/rng.hpp"
#include "gdw/tradeoff.hpp"

namespace gdw {

namespace {

// Evaluation budget per local search; generous, normal searches use a few
// thousand evaluations.
constexpr int kMaxEvals = 400000;

// Full grid start enumeration is skipped above this many combinations in
// favor of diagonal starts.
constexpr double kGridCap = 1000.0;

double objective_unchecked(const ProductStructure& structure,
                           const std::vector<double>& z) {
  const auto& factors = structure.factors();
  double first = 1.0, second = 1.0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    first *= z[i];
    second *= factors[i].kind == Kind::Quantum
                  ? tradeoff_q(factors[i].dim, z[i])
                  : tradeoff_c(factors[i].dim, z[i]);
  }
  return 0.5 * (first + second);
}

struct LocalResult {
  std::vector<double> x;
  double value = -std::numeric_limits<double>::infinity();
  bool converged = false;
};

LocalResult pattern_search(const ProductStructure& structure,
                           const std::vector<double>& lo,
                           const std::vector<double>& hi,
                           std::vector<double> x, double box_tolerance) {
  const std::size_t r = x.size();
  std::vector<double> width(r), step(r);
  for (std::size_t i = 0; i < r; ++i) {
    width[i] = hi[i] - lo[i];
    step[i] = 0.25 * width[i];
    x[i] = std::clamp(x[i], lo[i], hi[i]);
  }
  double fx = objective_unchecked(structure, x);
  int evals = 1;

  std::vector<double> cand = x, best_cand = x;
  while (evals < kMaxEvals) {
    double best_val = fx;
    bool improved = false;
    for (std::size_t i = 0; i < r; ++i) {
      for (double sign : {1.0, -1.0}) {
        const double moved = std::clamp(x[i] + sign * step[i], lo[i], hi[i]);
        if (moved == x[i]) {
          continue;
        }
        cand = x;
        cand[i] = moved;
        const double fc = objective_unchecked(structure, cand);
        ++evals;
        if (fc > best_val) {
          best_val = fc;
          best_cand = cand;
          improved = true;
        }
      }
    }
    if (improved) {
      x = best_cand;
      fx = best_val;
      continue;
    }
    bool done = true;
    for (std::size_t i = 0; i < r; ++i) {
      if (step[i] > box_tolerance * width[i]) {
        done = false;
      }
      step[i] *= 0.5;
    }
    if (done) {
      return {std::move(x), fx, true};
    }
  }
  return {std::move(x), fx, false};
}

int nth_prime(int n) {
  static const std::vector<int> primes = [] {
    std::vector<int> out;
    for (int c = 2; out.size() < 512; ++c) {
      bool prime = true;
      for (int p : out) {
        if (p * p > c) {
          break;
        }
        if (c % p == 0) {
          prime = false;
          break;
        }
      }
      if (prime) {
        out.push_back(c);
      }
    }
    return out;
  }();
  return primes[static_cast<std::size_t>(n)];
}

double halton(std::uint64_t index, int base) {
  double f = 1.0, value = 0.0;
  while (index > 0) {
    f /= base;
    value += f * static_cast<double>(index % base);
    index /= base;
  }
  return value;
}

// Per-variable deterministic grid: box edges plus the symmetric point, with
// further evenly spaced interior points above 3 per variable.
std::vector<double> grid_points(const Factor& factor, double lo, double hi,
                                int count) {
  const double symmetric =
      factor.kind == Kind::Quantum
          ? tradeoff_fixed_point(factor.dim)
          : 0.5 * (1.0 + 1.0 / static_cast<double>(factor.dim));
  if (count == 1) {
    return {symmetric};
  }
  std::vector<double> points{lo, hi};
  if (count >= 3) {
    points.push_back(symmetric);
  }
  for (int extra = 3; extra < count; ++extra) {
    const double frac = static_cast<double>(extra - 2) / (count - 2);
    points.push_back(lo + frac * (hi - lo));
  }
  std::sort(points.begin(), points.end());
  return points;
}

std::vector<std::vector<double>> start_points(const ProductStructure& structure,
                                              const SolverConfig& config,
                                              const std::vector<double>& lo,
                                              const std::vector<double>& hi) {
  const std::size_t r = structure.size();
  std::vector<std::vector<double>> per_var(r);
  for (std::size_t i = 0; i < r; ++i) {
    per_var[i] =
        grid_points(structure.factors()[i], lo[i], hi[i], config.multistart_grid);
  }

  std::vector<std::vector<double>> starts;
  const double combos =
      std::pow(static_cast<double>(config.multistart_grid), static_cast<double>(r));
  if (combos <= kGridCap) {
    std::vector<std::size_t> idx(r, 0);
    while (true) {
      std::vector<double> point(r);
      for (std::size_t i = 0; i < r; ++i) {
        point[i] = per_var[i][idx[i]];
      }
      starts.push_back(std::move(point));
      std::size_t carry = 0;
      while (carry < r && ++idx[carry] == per_var[carry].size()) {
        idx[carry] = 0;
        ++carry;
      }
      if (carry == r) {
        break;
      }
    }
  } else {
    for (std::size_t t = 0; t < per_var[0].size(); ++t) {
      std::vector<double> point(r);
      for (std::size_t i = 0; i < r; ++i) {
        point[i] = per_var[i][std::min(t, per_var[i].size() - 1)];
      }
      starts.push_back(std::move(point));
    }
  }

  const CounterRng rng(config.seed);
  for (int s = 1; s <= config.random_starts; ++s) {
    std::vector<double> point(r);
    for (std::size_t i = 0; i < r; ++i) {
      const double shifted =
          halton(static_cast<std::uint64_t>(s), nth_prime(static_cast<int>(i))) +
          rng.unit(i);
      point[i] = lo[i] + (hi[i] - lo[i]) * (shifted - std::floor(shifted));
    }
    starts.push_back(std::move(point));
  }
  return starts;
}

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

void SolverConfig::validate() const {
  if (!(box_tolerance > 0.0) || !(objective_tolerance >= 0.0)) {
    throw std::invalid_argument("solver tolerances must be positive");
  }
  if (multistart_grid < 1 || random_starts < 0) {
    throw std::invalid_argument("solver start counts must be positive");
  }
}

double objective(const ProductStructure& structure,
                 const std::vector<double>& z) {
  const auto& factors = structure.factors();
  if (z.size() != factors.size()) {
    throw std::invalid_argument("z has " + std::to_string(z.size()) +
                                " entries for " + std::to_string(factors.size()) +
                                " factors");
  }
  // tradeoff_q / tradeoff_c enforce the per-coordinate domain.
  return objective_unchecked(structure, z);
}

BoundResult solve_bound(const ProductStructure& structure,
                        const SolverConfig& config) {
  config.validate();
  const auto& factors = structure.factors();
  const std::size_t r = factors.size();

  if (r == 1) {
    const Factor& f = factors[0];
    const double arg = f.kind == Kind::Quantum ? tradeoff_fixed_point(f.dim)
                                               : 1.0 / static_cast<double>(f.dim);
    return {structure, optimal_asp_single(f.dim, f.kind), {arg}, 0,
            SolveStatus::Converged};
  }

  std::vector<double> lo(r), hi(r, 1.0);
  for (std::size_t i = 0; i < r; ++i) {
    lo[i] = 1.0 / static_cast<double>(factors[i].dim);
  }

  const auto starts = start_points(structure, config, lo, hi);
  std::vector<LocalResult> results(starts.size());
  parallel_for(starts.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      results[i] =
          pattern_search(structure, lo, hi, starts[i], config.box_tolerance);
    }
  });

  double best = -std::numeric_limits<double>::infinity();
  for (const LocalResult& res : results) {
    best = std::max(best, res.value);
  }
  const LocalResult* chosen = nullptr;
  for (const LocalResult& res : results) {
    if (res.value < best - config.objective_tolerance) {
      continue;
    }
    if (chosen == nullptr || lex_less(res.x, chosen->x)) {
      chosen = &res;
    }
  }

  BoundResult out;
  out.structure = structure;
  out.argmax = chosen->x;
  out.asp = objective_unchecked(structure, chosen->x);
  out.starts_used = static_cast<int>(starts.size());
  out.status =
      chosen->converged ? SolveStatus::Converged : SolveStatus::MaxIterations;
  return out;
}

std::vector<BoundResult> bound_table(std::int64_t d, StructureFilter filter,
                                     const SolverConfig& config) {
  const auto structures = enumerate_structures(d, filter);
  std::vector<BoundResult> out;
  out.reserve(structures.size());
  for (const ProductStructure& s : structures) {
    out.push_back(solve_bound(s, config));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const BoundResult& a, const BoundResult& b) {
                     if (a.asp != b.asp) {
                       return a.asp > b.asp;
                     }
                     return structure_less(a.structure, b.structure);
                   });
  return out;
}

}  // namespace gdw
