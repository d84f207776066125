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

#ifndef GDW_TRADEOFF_HPP
#define GDW_TRADEOFF_HPP

#include <cstdint>

#include "gdw/product_structure.hpp"

namespace gdw {

// The trade-off curves bound the pair (z, w) of success probabilities for
// guessing the first and second dit encoded in one d-dimensional system:
// given first-dit probability z in [1/d, 1], the curve value is the best
// attainable second-dit probability w.
//
// All functions accept z up to 1e-12 outside [1/d, 1] (clamped to the box);
// larger violations throw std::domain_error.

// Quantum curve: 1 - ((d-1)/d) * (sqrt(z) - sqrt((1-z)/(d-1)))^2.
double tradeoff_q(std::int64_t d, double z);

// Same curve in trigonometric form, cos^2(acos(1/sqrt(d)) - acos(sqrt(z))).
// Kept as an independently coded cross-check; better conditioned near z=1/d.
double tradeoff_q_trig(std::int64_t d, double z);

// Classical curve: (d+1)/d - z.
double tradeoff_c(std::int64_t d, double z);

// Best average success probability for a single factor: the symmetric point
// of the curve, (1 + 1/sqrt(d))/2 quantum and (1 + 1/d)/2 classical.
double optimal_asp_single(std::int64_t d, Kind kind);

// The z with tradeoff_q(d, z) == z, namely (1 + 1/sqrt(d))/2.
double tradeoff_fixed_point(std::int64_t d);

}  // namespace gdw

#endif  // GDW_TRADEOFF_HPP
