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
#include <vector>

#include "liaison/betti.hpp"
#include "liaison/groebner.hpp"
#include "liaison/ring.hpp"

namespace liaison {

/// Matrix of homogeneous polynomials between graded free modules. Column c is
/// the image of the c-th source generator, so entry (r, c) has degree
/// source_shifts[c] - target_shifts[r] unless it is zero.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(const Ring& ring, std::vector<int> target_shifts, std::vector<int> source_shifts);

  const Ring& ring() const { return ring_; }
  int rows() const { return static_cast<int>(target_.size()); }
  int cols() const { return static_cast<int>(source_.size()); }
  const std::vector<int>& target_shifts() const { return target_; }
  const std::vector<int>& source_shifts() const { return source_; }

  const Polynomial& at(int r, int c) const { return entries_[index(r, c)]; }
  Polynomial& at(int r, int c) { return entries_[index(r, c)]; }

  std::vector<Polynomial> column(int c) const;
  void set_column(int c, const std::vector<Polynomial>& v);

  bool is_zero() const;
  /// Every nonzero entry homogeneous of the degree dictated by the shifts.
  bool is_graded() const;
  /// Position of the first nonzero constant entry in row-major order.
  bool find_unit(int& r, int& c) const;

  void remove_row(int r);
  void remove_column(int c);
  /// row[i] -= factor * row[src]
  void row_axpy(int i, const Polynomial& factor, int src);

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * source_.size() + static_cast<std::size_t>(c);
  }

  Ring ring_;
  std::vector<int> target_;
  std::vector<int> source_;
  std::vector<Polynomial> entries_;
};

/// a * b; throws RingMismatch when a's source is not b's target.
GradedMap compose(const GradedMap& a, const GradedMap& b);

/// Chain complex R = F_0 <- F_1 <- ... ; maps[k] is the differential F_{k+1} -> F_k.
struct Resolution {
  Ring ring;
  std::vector<GradedMap> maps;
  bool minimal = false;

  int length() const { return static_cast<int>(maps.size()); }
  int rank(int k) const;
  std::vector<int> shifts(int k) const;
  /// Every consecutive composite vanishes.
  bool is_complex() const;
  /// No nonzero constant entry anywhere.
  bool has_unit_entry() const;
};

/// Schreyer-style resolution of R/I, built level by level from syzygies of
/// Groebner bases under induced module orders. Kept around so that module
/// elements can be lifted through the differentials.
class SchreyerFrame {
 public:
  explicit SchreyerFrame(const Ideal& I);
  ~SchreyerFrame();
  SchreyerFrame(SchreyerFrame&&) noexcept;
  SchreyerFrame& operator=(SchreyerFrame&&) noexcept;

  const Resolution& resolution() const { return res_; }

  /// Given w in the image of d_level (a vector over F_{level-1}), returns q
  /// with d_level(q) = w. Throws std::domain_error when w is not in the image.
  std::vector<Polynomial> lift(int level, const std::vector<Polynomial>& w) const;

  struct Level;

 private:
  Resolution res_;
  std::vector<Level> levels_;
};

/// Possibly nonminimal resolution of R/I.
Resolution free_resolution(const Ideal& I);

/// Cancels the unit entry (r, c) of maps[k], splitting off the summand pair.
/// `tracked` holds one map per homological degree whose rows index F_j
/// (it may be shorter than the complex); those are rewritten consistently so
/// that they stay chain maps into the smaller complex.
void cancel_unit(Resolution& res, int k, int r, int c, std::vector<GradedMap>* tracked = nullptr);

/// Cancels unit entries (maps ascending, row-major) until none remain.
Resolution minimalize(Resolution res, std::vector<GradedMap>* tracked = nullptr);

BettiDiagram betti(const Resolution& res);

/// Hilbert series numerator and degree data for R/I over (1 - t)^nvars.
struct HilbertData {
  std::vector<std::int64_t> numerator;  // coefficient of t^k at index k
  int nvars = 0;
  int codim = 0;
  int dimension = 0;
  std::int64_t degree = 0;
  bool unit_ideal = false;
};

/// Numerator of the Hilbert series of R/(monomials).
std::vector<std::int64_t> hilbert_numerator(std::span<const Monomial> monomials, int nvars);
/// Alternating shift sum of any (possibly nonminimal) resolution.
std::vector<std::int64_t> hilbert_numerator(const Resolution& res);
/// Divides out (1 - t) as often as possible and evaluates at t = 1.
HilbertData hilbert_from_numerator(std::vector<std::int64_t> numerator, int nvars);
/// Hilbert data from the initial ideal. The unit ideal gets degree 0 and a flag.
HilbertData hilbert_degree(const Ideal& I);

}  // namespace liaison
