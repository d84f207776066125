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

#include "gdw/qrac_sim.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdw/mub_encoding.hpp"
#include "gdw/parallel.hpp"
#include "gdw/rng.hpp"

namespace gdw {

namespace {

// Draw slots within a round's counter block.
enum Slot : std::uint64_t {
  kSlotX1 = 0,
  kSlotX2 = 1,
  kSlotY = 2,
  kSlotJ = 3,
  kSlotClick = 4,
  kSlotThin = 5,
};
constexpr std::uint64_t kSlotsPerRound = 8;

constexpr double kSeriesThreshold = 1e-9;

struct RoundOutcome {
  std::uint64_t x1, x2, y, j;
  bool hit;
  bool click;
};

int poisson_draw(double mean, double u) {
  double p = std::exp(-mean);
  double cumulative = p;
  int n = 0;
  while (u >= cumulative && n < 100000) {
    ++n;
    p *= mean / n;
    cumulative += p;
  }
  return n;
}

class RoundSampler {
 public:
  explicit RoundSampler(const SimConfig& config)
      : config_(config),
        mubs_(build_mub(config.k)),
        rng_(config.seed),
        nbits_(2 * config.k),
        dim_(static_cast<double>(mubs_.dim)),
        norm_sq_(2.0 * (1.0 + 1.0 / std::sqrt(dim_))) {}

  int dim() const { return mubs_.dim; }

  RoundOutcome round(std::uint64_t index) const {
    const std::uint64_t base = index * kSlotsPerRound;
    RoundOutcome out;
    out.x1 = 1 + rng_.bits(base + kSlotX1, nbits_);
    out.x2 = 1 + rng_.bits(base + kSlotX2, nbits_);
    out.y = 1 + rng_.bits(base + kSlotY, 1);
    out.j = 1 + rng_.bits(base + kSlotJ, nbits_);
    out.hit = out.y == 1 ? out.j == out.x1 : out.j == out.x2;

    // Projection probability of the measured column onto the optimal
    // encoding, from exact integer column dots.
    const int ix1 = static_cast<int>(out.x1) - 1;
    const int ix2 = static_cast<int>(out.x2) - 1;
    const int ij = static_cast<int>(out.j) - 1;
    const std::int64_t cross = mubs_.basis1.column_dot(ix1, mubs_.basis2, ix2);
    const SignMatrix& basis = out.y == 1 ? mubs_.basis1 : mubs_.basis2;
    const double with_first =
        static_cast<double>(basis.column_dot(ij, mubs_.basis1, ix1));
    const double with_second =
        static_cast<double>(basis.column_dot(ij, mubs_.basis2, ix2));
    const double amp = cross > 0 ? with_first + with_second
                                 : with_first - with_second;
    double q = amp * amp / (dim_ * dim_ * norm_sq_);
    q = config_.visibility * q + (1.0 - config_.visibility) / dim_;

    if (config_.sample_photons) {
      const int photons =
          poisson_draw(config_.mu, rng_.unit(base + kSlotClick));
      const double miss_all = std::pow(1.0 - config_.nu * q, photons);
      out.click = rng_.unit(base + kSlotThin) < 1.0 - miss_all;
    } else {
      const double p_click = 1.0 - std::exp(-config_.nu * config_.mu * q);
      out.click = rng_.unit(base + kSlotClick) < p_click;
    }
    return out;
  }

 private:
  SimConfig config_;
  MubPair mubs_;
  CounterRng rng_;
  int nbits_;
  double dim_;
  double norm_sq_;
};

void add_round(ClickTally& tally, const RoundOutcome& out) {
  if (out.hit) {
    ++tally.X1;
    tally.D1 += out.click ? 1 : 0;
  } else {
    ++tally.X2;
    tally.D2 += out.click ? 1 : 0;
  }
}

}  // namespace

void SimConfig::validate() const {
  if (k < 1 || k > 7) {
    throw std::invalid_argument("k must be in [1, 7]");
  }
  if (!(mu >= 0.0)) {
    throw std::invalid_argument("mu must be nonnegative");
  }
  if (!(nu >= 0.0 && nu <= 1.0)) {
    throw std::invalid_argument("nu must be in [0, 1]");
  }
  if (!(visibility > 0.0 && visibility <= 1.0)) {
    throw std::invalid_argument("visibility must be in (0, 1]");
  }
  if (rounds < 1) {
    throw std::invalid_argument("rounds must be at least 1");
  }
}

ClickTally simulate(const SimConfig& config, std::ostream* click_log) {
  config.validate();
  const RoundSampler sampler(config);

  if (click_log != nullptr) {
    *click_log << "round,x1,x2,y,j,click\n";
    ClickTally tally;
    for (std::uint64_t i = 0; i < config.rounds; ++i) {
      const RoundOutcome out = sampler.round(i);
      add_round(tally, out);
      *click_log << (i + 1) << ',' << out.x1 << ',' << out.x2 << ',' << out.y
                 << ',' << out.j << ',' << (out.click ? 1 : 0) << '\n';
    }
    return tally;
  }

  const std::size_t rounds = static_cast<std::size_t>(config.rounds);
  const std::size_t blocks =
      std::min<std::size_t>(static_cast<std::size_t>(worker_count()) * 4, rounds);
  const std::size_t per_block = (rounds + blocks - 1) / blocks;
  std::vector<ClickTally> partial(blocks);
  parallel_for(blocks, [&](std::size_t begin, std::size_t end) {
    for (std::size_t b = begin; b < end; ++b) {
      ClickTally local;
      const std::size_t lo = b * per_block;
      const std::size_t hi = std::min(lo + per_block, rounds);
      for (std::size_t i = lo; i < hi; ++i) {
        add_round(local, sampler.round(static_cast<std::uint64_t>(i)));
      }
      partial[b] = local;
    }
  });
  ClickTally tally;
  for (const ClickTally& part : partial) {
    tally.X1 += part.X1;
    tally.X2 += part.X2;
    tally.D1 += part.D1;
    tally.D2 += part.D2;
  }
  return tally;
}

std::pair<double, double> expected_click_rates(double q, std::int64_t d,
                                               double nu_mu) {
  if (d < 2) {
    throw std::invalid_argument("dimension must be at least 2");
  }
  if (!(nu_mu >= 0.0)) {
    throw std::invalid_argument("nu*mu must be nonnegative");
  }
  const double miss = (1.0 - q) / (static_cast<double>(d) - 1.0);
  return {-std::expm1(-nu_mu * q), -std::expm1(-nu_mu * miss)};
}

double fom_closed_form(double q, std::int64_t d, double nu_mu) {
  if (d < 2) {
    throw std::invalid_argument("dimension must be at least 2");
  }
  if (!(nu_mu >= 0.0)) {
    throw std::invalid_argument("nu*mu must be nonnegative");
  }
  if (nu_mu < kSeriesThreshold) {
    return fom_first_order(q, d, nu_mu);
  }
  const auto [rate1, rate2] = expected_click_rates(q, d, nu_mu);
  return rate1 / (rate1 + (static_cast<double>(d) - 1.0) * rate2);
}

double fom_first_order(double q, std::int64_t d, double nu_mu) {
  if (d < 2) {
    throw std::invalid_argument("dimension must be at least 2");
  }
  const double dd = static_cast<double>(d);
  return q - (1.0 - q) / (dd - 1.0) * q * (dd * q - 1.0) * nu_mu / 2.0;
}

}  // namespace gdw
