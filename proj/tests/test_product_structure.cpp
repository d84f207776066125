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

#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "gdw/errors.hpp"
#include "gdw/product_structure.hpp"

using gdw::enumerate_structures;
using gdw::Factor;
using gdw::Kind;
using gdw::parse_structure;
using gdw::ParseError;
using gdw::ProductStructure;
using gdw::structure_less;
using gdw::StructureFilter;

TEST_SUITE_BEGIN("product_structure");

TEST_CASE("canonical order puts larger dimensions and quantum factors first") {
  const auto s = ProductStructure::of(
      {{2, Kind::Classical}, {512, Kind::Quantum}, {2, Kind::Quantum}});
  CHECK(s.render() == "Q512*Q2*C2");
  CHECK(s.total_dim() == 2048);
  CHECK(s.size() == 3);
}

TEST_CASE("factor dimensions below 2 are rejected") {
  CHECK_THROWS_AS(ProductStructure::of({{1, Kind::Quantum}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ProductStructure::of({}), std::invalid_argument);
}

TEST_CASE("enumerate d=4 lists all five structures in order") {
  const auto all = enumerate_structures(4, StructureFilter::All);
  REQUIRE(all.size() == 5);
  CHECK(all[0].render() == "Q4");
  CHECK(all[1].render() == "C4");
  CHECK(all[2].render() == "Q2*Q2");
  CHECK(all[3].render() == "Q2*C2");
  CHECK(all[4].render() == "C2*C2");
}

TEST_CASE("enumerate a prime dimension") {
  const auto all = enumerate_structures(7, StructureFilter::All);
  REQUIRE(all.size() == 2);
  CHECK(all[0].render() == "Q7");
  CHECK(all[1].render() == "C7");
}

TEST_CASE("quantum-only count for 1024 is the number of factorizations") {
  const auto quantum = enumerate_structures(1024, StructureFilter::QuantumOnly);
  CHECK(quantum.size() == 42);
  for (const auto& s : quantum) {
    for (const Factor& f : s.factors()) {
      CHECK(f.kind == Kind::Quantum);
    }
  }
}

TEST_CASE("quantum-only count for other dimensions") {
  CHECK(enumerate_structures(2, StructureFilter::QuantumOnly).size() == 1);
  CHECK(enumerate_structures(12, StructureFilter::QuantumOnly).size() == 4);
  CHECK(enumerate_structures(64, StructureFilter::QuantumOnly).size() == 11);
}

TEST_CASE("enumerations hold no duplicates and multiply back to d") {
  for (std::int64_t d : {4, 12, 36, 64, 97, 360}) {
    const auto all = enumerate_structures(d, StructureFilter::All);
    std::set<std::string> seen;
    for (const auto& s : all) {
      CHECK(s.total_dim() == d);
      std::int64_t product = 1;
      for (const Factor& f : s.factors()) {
        product *= f.dim;
      }
      CHECK(product == d);
      CHECK(seen.insert(s.render()).second);
    }
    for (std::size_t i = 1; i < all.size(); ++i) {
      CHECK(structure_less(all[i - 1], all[i]));
    }
  }
}

TEST_CASE("enumerate rejects dimensions below 2") {
  CHECK_THROWS_AS(enumerate_structures(1, StructureFilter::All),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_structures(0, StructureFilter::QuantumOnly),
                  std::invalid_argument);
}

TEST_CASE("parse accepts canonical and non-canonical factor order") {
  const auto s = parse_structure("Q512*C2");
  CHECK(s.total_dim() == 1024);
  CHECK(s.factors()[0].dim == 512);
  CHECK(s.factors()[1].kind == Kind::Classical);

  const auto reordered = parse_structure("C2*Q512");
  CHECK(reordered == s);
  CHECK(reordered.render() == "Q512*C2");
}

TEST_CASE("parse errors carry the byte offset") {
  const auto offset_of = [](const std::string& text) {
    try {
      parse_structure(text);
    } catch (const ParseError& e) {
      return static_cast<std::ptrdiff_t>(e.position());
    }
    return static_cast<std::ptrdiff_t>(-1);
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("X4") == 0);
  CHECK(offset_of("Q") == 1);
  CHECK(offset_of("Q4*") == 3);
  CHECK(offset_of("Q4**Q2") == 3);
  CHECK(offset_of("Q4*Q1") == 4);
  CHECK(offset_of("Q4 *Q2") == 2);
  CHECK(offset_of("q4") == 0);
  CHECK(offset_of("Q4*Q2") == -1);
}

TEST_CASE("parse and render round-trip over enumerations") {
  for (std::int64_t d : {4, 12, 64, 360}) {
    for (const auto& s : enumerate_structures(d, StructureFilter::All)) {
      CHECK(parse_structure(s.render()) == s);
    }
  }
}

TEST_SUITE_END();
