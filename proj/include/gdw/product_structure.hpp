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

#ifndef GDW_PRODUCT_STRUCTURE_HPP
#define GDW_PRODUCT_STRUCTURE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gdw {

enum class Kind { Quantum, Classical };

struct Factor {
  std::int64_t dim = 2;
  Kind kind = Kind::Quantum;

  friend bool operator==(const Factor&, const Factor&) = default;
};

enum class StructureFilter { All, QuantumOnly };

// A labeled multiset of subsystem dimensions, e.g. Q512*C2: each factor is a
// dimension >= 2 tagged quantum or classical. Factors are kept in canonical
// order: dimension descending, quantum before classical at equal dimension.
class ProductStructure {
 public:
  // Validates every dimension and canonicalizes the order.
  static ProductStructure of(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  std::int64_t total_dim() const { return total_dim_; }

  // Canonical text form, e.g. "Q512*C2".
  std::string render() const;

  friend bool operator==(const ProductStructure&, const ProductStructure&) =
      default;

 private:
  std::vector<Factor> factors_;
  std::int64_t total_dim_ = 1;
};

// Enumeration order: fewer factors first, then dimension vectors compared
// descending, then kind vectors with quantum before classical.
bool structure_less(const ProductStructure& a, const ProductStructure& b);

// All distinct structures whose dimensions multiply to d. With QuantumOnly
// every factor is quantum; with All, every quantum/classical labeling of
// every factorization appears exactly once.
std::vector<ProductStructure> enumerate_structures(std::int64_t d,
                                                   StructureFilter filter);

// Parses "Q512*C2" style text. Grammar: factor ("*" factor)*, where factor is
// 'Q' or 'C' followed by an integer >= 2. Throws ParseError with the byte
// offset of the first offending character.
ProductStructure parse_structure(std::string_view text);

}  // namespace gdw

#endif  // GDW_PRODUCT_STRUCTURE_HPP
