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

#include "gdw/product_structure.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "gdw/errors.hpp"

namespace gdw {

namespace {

constexpr std::int64_t kMaxTotalDim =
    std::numeric_limits<std::int64_t>::max() / 2;

bool factor_less(const Factor& a, const Factor& b) {
  if (a.dim != b.dim) {
    return a.dim > b.dim;
  }
  return a.kind < b.kind;
}

// Divisors of n that are >= 2 and <= cap, descending.
std::vector<std::int64_t> divisors_descending(std::int64_t n,
                                              std::int64_t cap) {
  std::vector<std::int64_t> low, high;
  for (std::int64_t p = 1; p * p <= n; ++p) {
    if (n % p != 0) {
      continue;
    }
    low.push_back(p);
    if (p != n / p) {
      high.push_back(n / p);
    }
  }
  std::vector<std::int64_t> out;
  out.reserve(low.size() + high.size());
  for (auto it = high.rbegin(); it != high.rend(); ++it) {
    out.push_back(*it);
  }
  for (auto it = low.rbegin(); it != low.rend(); ++it) {
    out.push_back(*it);
  }
  std::erase_if(out, [cap](std::int64_t v) { return v < 2 || v > cap; });
  return out;
}

// All non-increasing dimension vectors multiplying to `remaining`, each
// factor <= max_factor.
void descend_factorizations(std::int64_t remaining, std::int64_t max_factor,
                            std::vector<std::int64_t>& current,
                            std::vector<std::vector<std::int64_t>>& out) {
  if (remaining == 1) {
    out.push_back(current);
    return;
  }
  for (std::int64_t f : divisors_descending(remaining, max_factor)) {
    current.push_back(f);
    descend_factorizations(remaining / f, f, current, out);
    current.pop_back();
  }
}

// Every way to label a canonical dimension vector with kinds, choosing for
// each run of equal dimensions how many leading factors are quantum.
void label_kinds(const std::vector<std::int64_t>& dims, std::size_t group_start,
                 std::vector<Factor>& current,
                 std::vector<ProductStructure>& out) {
  if (group_start == dims.size()) {
    out.push_back(ProductStructure::of(current));
    return;
  }
  std::size_t group_end = group_start;
  while (group_end < dims.size() && dims[group_end] == dims[group_start]) {
    ++group_end;
  }
  const std::size_t group_size = group_end - group_start;
  for (std::size_t quantum = group_size + 1; quantum-- > 0;) {
    for (std::size_t i = 0; i < group_size; ++i) {
      current.push_back({dims[group_start],
                         i < quantum ? Kind::Quantum : Kind::Classical});
    }
    label_kinds(dims, group_end, current, out);
    current.resize(current.size() - group_size);
  }
}

}  // namespace

ProductStructure ProductStructure::of(std::vector<Factor> factors) {
  if (factors.empty()) {
    throw std::invalid_argument("a product structure needs at least one factor");
  }
  ProductStructure s;
  s.total_dim_ = 1;
  for (const Factor& f : factors) {
    if (f.dim < 2) {
      throw std::invalid_argument("factor dimensions must be at least 2");
    }
    if (s.total_dim_ > kMaxTotalDim / f.dim) {
      throw std::invalid_argument("total dimension overflows");
    }
    s.total_dim_ *= f.dim;
  }
  std::sort(factors.begin(), factors.end(), factor_less);
  s.factors_ = std::move(factors);
  return s;
}

std::string ProductStructure::render() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) {
      out += '*';
    }
    out += factors_[i].kind == Kind::Quantum ? 'Q' : 'C';
    out += std::to_string(factors_[i].dim);
  }
  return out;
}

bool structure_less(const ProductStructure& a, const ProductStructure& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  if (fa.size() != fb.size()) {
    return fa.size() < fb.size();
  }
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (fa[i].dim != fb[i].dim) {
      return fa[i].dim > fb[i].dim;
    }
  }
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (fa[i].kind != fb[i].kind) {
      return fa[i].kind < fb[i].kind;
    }
  }
  return false;
}

std::vector<ProductStructure> enumerate_structures(std::int64_t d,
                                                   StructureFilter filter) {
  if (d < 2) {
    throw std::invalid_argument("dimension must be at least 2");
  }
  std::vector<std::vector<std::int64_t>> factorizations;
  std::vector<std::int64_t> scratch;
  descend_factorizations(d, d, scratch, factorizations);

  std::vector<ProductStructure> out;
  if (filter == StructureFilter::QuantumOnly) {
    out.reserve(factorizations.size());
    for (const auto& dims : factorizations) {
      std::vector<Factor> factors;
      factors.reserve(dims.size());
      for (std::int64_t dim : dims) {
        factors.push_back({dim, Kind::Quantum});
      }
      out.push_back(ProductStructure::of(std::move(factors)));
    }
  } else {
    std::vector<Factor> current;
    for (const auto& dims : factorizations) {
      label_kinds(dims, 0, current, out);
    }
  }
  std::sort(out.begin(), out.end(), structure_less);
  return out;
}

ProductStructure parse_structure(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty structure string", 0);
  }
  std::vector<Factor> factors;
  std::size_t pos = 0;
  while (true) {
    if (pos >= text.size()) {
      throw ParseError("expected a factor after '*'", pos);
    }
    Kind kind;
    if (text[pos] == 'Q') {
      kind = Kind::Quantum;
    } else if (text[pos] == 'C') {
      kind = Kind::Classical;
    } else {
      throw ParseError("expected 'Q' or 'C'", pos);
    }
    ++pos;
    const std::size_t digits_start = pos;
    std::int64_t dim = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (dim > kMaxTotalDim / 10) {
        throw ParseError("factor dimension overflows", digits_start);
      }
      dim = dim * 10 + (text[pos] - '0');
      ++pos;
    }
    if (pos == digits_start) {
      throw ParseError("expected a dimension after the kind letter", pos);
    }
    if (dim < 2) {
      throw ParseError("factor dimensions must be at least 2", digits_start);
    }
    factors.push_back({dim, kind});
    if (pos == text.size()) {
      break;
    }
    if (text[pos] != '*') {
      throw ParseError("expected '*' between factors", pos);
    }
    ++pos;
  }
  try {
    return ProductStructure::of(std::move(factors));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace gdw
