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

#ifndef GDW_ERRORS_HPP
#define GDW_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gdw {

// Failure while reading structured text input. `position` is the 0-based
// byte offset for one-line inputs (structure strings) and the 1-based line
// number for line-oriented inputs (click logs).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gdw

#endif  // GDW_ERRORS_HPP
