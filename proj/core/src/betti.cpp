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

#include "liaison/betti.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace liaison {

BettiDiagram BettiDiagram::from_shifts(const std::vector<std::vector<int>>& columns) {
  BettiDiagram d;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (int j : columns[i]) d.add(static_cast<int>(i), j);
  }
  return d;
}

void BettiDiagram::add(int i, int j, int rank) {
  if (rank <= 0) throw std::invalid_argument("betti rank must be positive");
  if (i < 0) throw std::invalid_argument("negative homological index");
  table_[{i, j}] += rank;
}

int BettiDiagram::rank(int i, int j) const {
  auto it = table_.find({i, j});
  return it == table_.end() ? 0 : it->second;
}

int BettiDiagram::length() const { return table_.empty() ? -1 : table_.rbegin()->first.first; }

int BettiDiagram::total(int i) const {
  int s = 0;
  for (auto it = table_.lower_bound({i, std::numeric_limits<int>::min()});
       it != table_.end() && it->first.first == i; ++it) {
    s += it->second;
  }
  return s;
}

std::vector<int> BettiDiagram::totals() const {
  std::vector<int> out;
  for (int i = 0; i <= length(); ++i) out.push_back(total(i));
  return out;
}

std::vector<int> BettiDiagram::shifts(int i) const {
  std::vector<int> out;
  for (const auto& [key, r] : table_) {
    if (key.first == i) out.insert(out.end(), static_cast<std::size_t>(r), key.second);
  }
  return out;  // map order keeps them ascending
}

int BettiDiagram::min_shift(int i) const {
  auto s = shifts(i);
  if (s.empty()) throw std::invalid_argument("empty betti column " + std::to_string(i));
  return s.front();
}

int BettiDiagram::max_shift(int i) const {
  auto s = shifts(i);
  if (s.empty()) throw std::invalid_argument("empty betti column " + std::to_string(i));
  return s.back();
}

int BettiDiagram::max_stratum() const {
  int r = -1;
  for (const auto& [key, rank] : table_) r = std::max(r, key.second - key.first);
  return r;
}

BettiDiagram koszul_diagram(std::span<const int> degrees) {
  if (degrees.empty()) throw std::invalid_argument("koszul diagram of an empty degree list");
  // counts[i][s]: number of i-subsets with sum s, built one degree at a time.
  std::vector<std::map<int, int>> counts(degrees.size() + 1);
  counts[0][0] = 1;
  for (int d : degrees) {
    for (std::size_t i = counts.size() - 1; i >= 1; --i) {
      for (const auto& [s, c] : counts[i - 1]) counts[i][s + d] += c;
    }
  }
  BettiDiagram out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (const auto& [s, c] : counts[i]) out.add(static_cast<int>(i), s, c);
  }
  out.codim = static_cast<int>(degrees.size());
  return out;
}

BettiDiagram dual_twist(const BettiDiagram& d, int alpha, int length) {
  BettiDiagram out;
  for (const auto& [key, r] : d.entries()) {
    if (key.first > length) throw std::invalid_argument("dual twist beyond the given length");
    out.add(length - key.first, alpha - key.second, r);
  }
  return out;
}

BettiDiagram mapping_cone_diagram(const BettiDiagram& F, const BettiDiagram& G, int alpha) {
  const int n = F.length();
  if (n < 1 || G.length() != n) {
    throw std::invalid_argument("mapping cone needs resolutions of equal positive length");
  }
  BettiDiagram out = BettiDiagram::cyclic();
  for (const auto& [key, r] : G.entries()) {
    if (key.first >= 1) out.add(n - key.first + 1, alpha - key.second, r);
  }
  for (const auto& [key, r] : F.entries()) {
    if (key.first >= 1 && key.first < n) out.add(n - key.first, alpha - key.second, r);
  }
  out.codim = n;
  return out;
}

}  // namespace liaison
