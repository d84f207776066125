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

#include "gdw/mub_encoding.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "gdw/rng.hpp"

namespace gdw {

namespace {

// The seed pair of 4x4 sign bases. Columns are the basis states; within each
// matrix the columns are orthogonal and every cross dot between the two has
// magnitude 2.
constexpr int kBase1[4][4] = {
    {1, 1, 1, 1},
    {1, -1, 1, -1},
    {1, 1, -1, -1},
    {1, -1, -1, 1},
};
constexpr int kBase2[4][4] = {
    {1, -1, 1, 1},
    {1, -1, -1, -1},
    {1, 1, 1, -1},
    {-1, -1, 1, -1},
};

SignMatrix tensor_power(const int base[4][4], int k) {
  SignMatrix m(4);
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) {
      m.set_entry(row, col, base[row][col]);
    }
  }
  for (int level = 2; level <= k; ++level) {
    const int small_dim = m.dim();
    const int dim = 4 * small_dim;
    SignMatrix next(dim);
    for (int col = 0; col < dim; ++col) {
      const int c4 = col / small_dim;
      const int cs = col % small_dim;
      for (int row = 0; row < dim; ++row) {
        next.set_entry(row, col,
                       base[row / small_dim][c4] * m.entry(row % small_dim, cs));
      }
    }
    m = std::move(next);
  }
  return m;
}

void require_index(const MubPair& mubs, int index, const char* name) {
  if (index < 1 || index > mubs.dim) {
    throw std::out_of_range(std::string(name) + " = " + std::to_string(index) +
                            " is outside [1, " + std::to_string(mubs.dim) + "]");
  }
}

// Shared detail of encode_optimal and curve_state: combine column x1 of
// basis1 with column x2 of basis2, the latter sign-flipped when the two
// columns anti-align, with weights t and (1-t).
EncodedState interpolated_state(const MubPair& mubs, int x1, int x2, double t) {
  require_index(mubs, x1, "x1");
  require_index(mubs, x2, "x2");
  const double dim = static_cast<double>(mubs.dim);
  const double root = std::sqrt(dim);
  const std::int64_t cross =
      mubs.basis1.column_dot(x1 - 1, mubs.basis2, x2 - 1);
  const double sign = cross > 0 ? 1.0 : -1.0;
  const double u = 1.0 - t;
  const double norm =
      std::sqrt(t * t + u * u + 2.0 * t * u / root);

  EncodedState state;
  state.x1 = x1;
  state.x2 = x2;
  state.coef1 = t / (root * norm);
  state.coef2 = sign * u / (root * norm);
  state.amplitudes.resize(static_cast<std::size_t>(mubs.dim));
  for (int row = 0; row < mubs.dim; ++row) {
    state.amplitudes[static_cast<std::size_t>(row)] =
        state.coef1 * mubs.basis1.entry(row, x1 - 1) +
        state.coef2 * mubs.basis2.entry(row, x2 - 1);
  }
  return state;
}

}  // namespace

SignMatrix::SignMatrix(int dim)
    : dim_(dim),
      words_per_col_((dim + 63) / 64),
      bits_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(words_per_col_)) {
  if (dim < 1) {
    throw std::invalid_argument("matrix dimension must be positive");
  }
}

void SignMatrix::set_entry(int row, int col, int value) {
  const std::size_t word =
      static_cast<std::size_t>(col) * words_per_col_ + (row >> 6);
  const std::uint64_t mask = 1ULL << (row & 63);
  if (value < 0) {
    bits_[word] |= mask;
  } else {
    bits_[word] &= ~mask;
  }
}

std::int64_t SignMatrix::column_dot(int col_a, const SignMatrix& other,
                                    int col_b) const {
  const std::uint64_t* a =
      bits_.data() + static_cast<std::size_t>(col_a) * words_per_col_;
  const std::uint64_t* b =
      other.bits_.data() + static_cast<std::size_t>(col_b) * other.words_per_col_;
  int negatives = 0;
  for (int w = 0; w < words_per_col_; ++w) {
    negatives += std::popcount(a[w] ^ b[w]);
  }
  return static_cast<std::int64_t>(dim_) - 2 * negatives;
}

MubPair build_mub(int k) {
  if (k < 1 || k > 7) {
    throw std::invalid_argument("k must be in [1, 7]");
  }
  int dim = 1;
  for (int i = 0; i < k; ++i) {
    dim *= 4;
  }
  return {k, dim, tensor_power(kBase1, k), tensor_power(kBase2, k)};
}

EncodedState encode_optimal(const MubPair& mubs, int x1, int x2) {
  return interpolated_state(mubs, x1, x2, 0.5);
}

EncodedState curve_state(const MubPair& mubs, int x1, int x2, double t) {
  if (t < 0.0 || t > 1.0) {
    throw std::domain_error("t must be in [0, 1]");
  }
  return interpolated_state(mubs, x1, x2, t);
}

double measurement_overlap(const MubPair& mubs, int y, int j,
                           const EncodedState& state) {
  if (y != 1 && y != 2) {
    throw std::out_of_range("y must be 1 or 2");
  }
  require_index(mubs, j, "j");
  require_index(mubs, state.x1, "state.x1");
  require_index(mubs, state.x2, "state.x2");
  const SignMatrix& basis = y == 1 ? mubs.basis1 : mubs.basis2;
  const std::int64_t with_first =
      basis.column_dot(j - 1, mubs.basis1, state.x1 - 1);
  const std::int64_t with_second =
      basis.column_dot(j - 1, mubs.basis2, state.x2 - 1);
  const double amplitude =
      (state.coef1 * static_cast<double>(with_first) +
       state.coef2 * static_cast<double>(with_second)) /
      std::sqrt(static_cast<double>(mubs.dim));
  return amplitude * amplitude;
}

bool check_orthogonality(const SignMatrix& m) {
  for (int a = 0; a < m.dim(); ++a) {
    for (int b = a; b < m.dim(); ++b) {
      const std::int64_t expected = a == b ? m.dim() : 0;
      if (m.column_dot(a, m, b) != expected) {
        return false;
      }
    }
  }
  return true;
}

bool check_unbiasedness(const MubPair& mubs) {
  std::int64_t root = 1;
  for (int i = 0; i < mubs.k; ++i) {
    root *= 2;
  }
  for (int a = 0; a < mubs.dim; ++a) {
    for (int b = 0; b < mubs.dim; ++b) {
      const std::int64_t dot = mubs.basis1.column_dot(a, mubs.basis2, b);
      if (dot != root && dot != -root) {
        return false;
      }
    }
  }
  return true;
}

bool check_unbiasedness_sampled(const MubPair& mubs, int pairs,
                                std::uint64_t seed) {
  std::int64_t root = 1;
  for (int i = 0; i < mubs.k; ++i) {
    root *= 2;
  }
  const CounterRng rng(seed);
  for (int s = 0; s < pairs; ++s) {
    const auto index = static_cast<std::uint64_t>(s);
    const int a = static_cast<int>(rng.word(2 * index) %
                                   static_cast<std::uint64_t>(mubs.dim));
    const int b = static_cast<int>(rng.word(2 * index + 1) %
                                   static_cast<std::uint64_t>(mubs.dim));
    const std::int64_t dot = mubs.basis1.column_dot(a, mubs.basis2, b);
    if (dot != root && dot != -root) {
      return false;
    }
  }
  return true;
}

bool check_tensor_factorization(const MubPair& big, const MubPair& small) {
  if (big.k != small.k + 1 || big.dim != 4 * small.dim) {
    return false;
  }
  const int d = small.dim;
  for (int row = 0; row < big.dim; ++row) {
    for (int col = 0; col < big.dim; ++col) {
      if (big.basis1.entry(row, col) !=
          kBase1[row / d][col / d] * small.basis1.entry(row % d, col % d)) {
        return false;
      }
      if (big.basis2.entry(row, col) !=
          kBase2[row / d][col / d] * small.basis2.entry(row % d, col % d)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace gdw
