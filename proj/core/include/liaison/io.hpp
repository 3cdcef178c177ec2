// Copyright 2026 The liaison Authors
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

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "liaison/betti.hpp"
#include "liaison/ring.hpp"

namespace liaison {

/// Rejected ideal file, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

struct IdealFile {
  Ring ring;
  std::vector<Polynomial> generators;
};

/// Text format:
///
///     # comment
///     ring <prime> <nvars>
///     ideal <poly>, <poly>, ...
///
/// Variables are x0 .. x{nvars-1}; terms like 3*x0^2*x1 or 3x0^2x1. The
/// generator list may wrap across lines. Every generator must be homogeneous.
IdealFile parse_ideal_file(std::string_view text);

/// Inverse of parse_ideal_file up to term order.
std::string format_ideal_file(const Ring& ring, std::span<const Polynomial> generators);

/// Stratified table: header of column totals, then one row per r = j - i with
/// rank(i, i + r) per column and "--" for zero. Single spaces, one line each.
std::string render_betti(const BettiDiagram& d);

/// One "i j rank" line per nonzero entry, by column then degree.
std::string render_betti_raw(const BettiDiagram& d);

}  // namespace liaison
