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

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace liaison {

/// Finitely supported rank table: (homological index i, internal degree j) -> rank.
/// An entry (i, j) counts summands R(-j) in the i-th free module.
class BettiDiagram {
 public:
  using Key = std::pair<int, int>;

  BettiDiagram() = default;
  /// Diagram with a single R in column 0, the shape of R/0.
  static BettiDiagram cyclic() {
    BettiDiagram d;
    d.add(0, 0);
    return d;
  }
  /// Builds the diagram from per-column shift lists.
  static BettiDiagram from_shifts(const std::vector<std::vector<int>>& columns);

  /// Adds `rank` copies of R(-j) to column i. Non-positive ranks are rejected.
  void add(int i, int j, int rank = 1);

  int rank(int i, int j) const;
  const std::map<Key, int>& entries() const { return table_; }

  /// Largest homological index with a nonzero entry; -1 when empty.
  int length() const;
  int total(int i) const;
  std::vector<int> totals() const;
  /// Shift multiset of column i, ascending.
  std::vector<int> shifts(int i) const;
  /// Throws std::invalid_argument on an empty column.
  int min_shift(int i) const;
  int max_shift(int i) const;
  /// Largest j - i over all entries; -1 when empty.
  int max_stratum() const;

  std::optional<int> codim;

  bool operator==(const BettiDiagram& o) const { return table_ == o.table_; }

 private:
  std::map<Key, int> table_;
};

/// Koszul diagram of a regular sequence of the given degrees: entry (i, s)
/// counts i-subsets with degree sum s.
BettiDiagram koszul_diagram(std::span<const int> degrees);

/// (k, j) -> (length - k, alpha - j). Applying it twice with the same
/// arguments is the identity.
BettiDiagram dual_twist(const BettiDiagram& d, int alpha, int length);

/// Shift-level mapping cone for a link through a Gorenstein X of socle twist
/// alpha: column i < n holds G^dual_{n-i+1} and F^dual_{n-i}, column n holds
/// G^dual_1, all twisted by -alpha. Throws when F and G differ in length.
BettiDiagram mapping_cone_diagram(const BettiDiagram& F, const BettiDiagram& G, int alpha);

}  // namespace liaison
