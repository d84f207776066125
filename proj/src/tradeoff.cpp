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

#include "gdw/tradeoff.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gdw {

namespace {

constexpr double kDomainSlop = 1e-12;

void require_dim(std::int64_t d) {
  if (d < 2) {
    throw std::invalid_argument("dimension must be at least 2");
  }
}

double clamp_to_box(std::int64_t d, double z) {
  const double lo = 1.0 / static_cast<double>(d);
  if (z < lo) {
    if (lo - z > kDomainSlop) {
      throw std::domain_error("z = " + std::to_string(z) +
                              " is below 1/d for d = " + std::to_string(d));
    }
    return lo;
  }
  if (z > 1.0) {
    if (z - 1.0 > kDomainSlop) {
      throw std::domain_error("z = " + std::to_string(z) + " exceeds 1");
    }
    return 1.0;
  }
  return z;
}

}  // namespace

double tradeoff_q(std::int64_t d, double z) {
  require_dim(d);
  z = clamp_to_box(d, z);
  const double dd = static_cast<double>(d);
  const double diff = std::sqrt(z) - std::sqrt((1.0 - z) / (dd - 1.0));
  return 1.0 - (dd - 1.0) / dd * diff * diff;
}

double tradeoff_q_trig(std::int64_t d, double z) {
  require_dim(d);
  z = clamp_to_box(d, z);
  const double dd = static_cast<double>(d);
  const double angle =
      std::acos(1.0 / std::sqrt(dd)) - std::acos(std::sqrt(z));
  const double c = std::cos(angle);
  return c * c;
}

double tradeoff_c(std::int64_t d, double z) {
  require_dim(d);
  z = clamp_to_box(d, z);
  const double dd = static_cast<double>(d);
  return (dd + 1.0) / dd - z;
}

double optimal_asp_single(std::int64_t d, Kind kind) {
  require_dim(d);
  const double dd = static_cast<double>(d);
  if (kind == Kind::Quantum) {
    return 0.5 * (1.0 + 1.0 / std::sqrt(dd));
  }
  return 0.5 * (1.0 + 1.0 / dd);
}

double tradeoff_fixed_point(std::int64_t d) {
  require_dim(d);
  return 0.5 * (1.0 + 1.0 / std::sqrt(static_cast<double>(d)));
}

}  // namespace gdw
