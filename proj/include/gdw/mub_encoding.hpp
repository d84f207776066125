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

#ifndef GDW_MUB_ENCODING_HPP
#define GDW_MUB_ENCODING_HPP

#include <cstdint>
#include <vector>

namespace gdw {

// Square matrix with entries +1/-1, stored bit-packed column-major
// (set bit = -1). Columns are used as unnormalized basis vectors.
class SignMatrix {
 public:
  explicit SignMatrix(int dim);

  int dim() const { return dim_; }

  // Entry as +1 or -1.
  int entry(int row, int col) const {
    const std::uint64_t word =
        bits_[static_cast<std::size_t>(col) * words_per_col_ + (row >> 6)];
    return (word >> (row & 63)) & 1 ? -1 : 1;
  }

  void set_entry(int row, int col, int value);

  // Integer dot product of column col_a with column col_b of `other`, via
  // popcount on the packed words. Both matrices must share the dimension.
  std::int64_t column_dot(int col_a, const SignMatrix& other, int col_b) const;

 private:
  int dim_;
  int words_per_col_;
  std::vector<std::uint64_t> bits_;
};

// A pair of mutually unbiased +1/-1 bases in dimension 4^k: columns within a
// basis are orthogonal and every cross-basis column dot has magnitude 2^k.
// Built as the k-fold tensor power of an explicit 4x4 pair.
struct MubPair {
  int k = 1;
  int dim = 4;
  SignMatrix basis1;
  SignMatrix basis2;
};

// k in [1, 7] (dimension 4 to 16384).
MubPair build_mub(int k);

// Real unit vector of the form coef1*basis1_col(x1) + coef2*basis2_col(x2).
// Column indices are 1-based; amplitudes holds the dim components.
struct EncodedState {
  int x1 = 1;
  int x2 = 1;
  double coef1 = 0.0;
  double coef2 = 0.0;
  std::vector<double> amplitudes;
};

// The encoding maximizing the symmetric success pair: both basis overlaps
// |<col_x1|psi>|^2 and |<col_x2|psi>|^2 equal (1 + 1/sqrt(d))/2, and every
// wrong column of either basis carries the uniform remainder.
EncodedState encode_optimal(const MubPair& mubs, int x1, int x2);

// Interpolated encoding t*col1(x1) + (1-t)*col2(x2) (sign-aligned and
// normalized), t in [0, 1]. Sweeping t traces the quantum trade-off curve;
// t = 1/2 reproduces encode_optimal.
EncodedState curve_state(const MubPair& mubs, int x1, int x2, double t);

// |<basis_y column j|state>|^2 for y in {1, 2}, j 1-based. Exact integer
// column dots feed a single floating division, so equal overlaps match to
// the last bit.
double measurement_overlap(const MubPair& mubs, int y, int j,
                           const EncodedState& state);

// Exact exhaustive checks (all column pairs).
bool check_orthogonality(const SignMatrix& m);
bool check_unbiasedness(const MubPair& mubs);

// Unbiasedness on `pairs` seeded pseudo-random cross pairs.
bool check_unbiasedness_sampled(const MubPair& mubs, int pairs,
                                std::uint64_t seed);

// Verifies entry-wise that big (at level k) equals the tensor product of the
// 4x4 base pair with small (at level k-1), for both bases.
bool check_tensor_factorization(const MubPair& big, const MubPair& small);

}  // namespace gdw

#endif  // GDW_MUB_ENCODING_HPP
