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

#include <span>
#include <vector>

#include "liaison/ring.hpp"

namespace liaison {

/// Reduced Groebner basis of the ideal generated by `gens` under the ring's
/// order. Pairs are processed lowest lcm degree first, ties by creation order.
/// The result is monic, inter-reduced and sorted by descending leading monomial.
/// Zero generators are ignored; no generators gives the empty basis.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens);

/// Full reduction of every basis element against the others, then monic and sorted.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis);

/// Homogeneous ideal with its reduced Groebner basis computed at construction.
class Ideal {
 public:
  /// Rejects inhomogeneous generators with std::invalid_argument. Zero
  /// generators are dropped.
  Ideal(const Ring& ring, std::vector<Polynomial> generators);

  static Ideal zero(const Ring& ring) { return Ideal(ring, {}); }
  static Ideal unit(const Ring& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& gb() const { return gb_; }
  int nvars() const { return ring_.nvars; }

  bool is_zero() const { return gb_.empty(); }
  bool is_unit() const { return gb_.size() == 1 && gb_.front().is_unit(); }

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  Polynomial reduce(const Polynomial& f) const;

  /// Ideal equality (identical reduced Groebner bases).
  bool operator==(const Ideal& other) const;

 private:
  Ring ring_;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> gb_;
};

/// I ∩ J via one auxiliary variable t (weight zero) eliminated with a block order.
Ideal intersect(const Ideal& I, const Ideal& J);

/// I : f. Throws std::invalid_argument when f is zero or inhomogeneous.
Ideal colon(const Ideal& I, const Polynomial& f);

/// I : J = ∩_j (I : g_j) over the generators of J. Throws on the zero ideal.
Ideal colon_ideal(const Ideal& I, const Ideal& J);

/// Number of variables minus the Krull dimension of R/I, read off the initial ideal.
int codim(const Ideal& I);

/// Krull dimension of R/(monomials): the largest variable subset that
/// contains the support of no generator.
int monomial_dimension(std::span<const Monomial> generators, int nvars);

/// True iff the ideal generated by `fs` has codimension fs.size().
bool is_regular_sequence(std::span<const Polynomial> fs);

/// Product ideal m·I of the maximal homogeneous ideal with I.
Ideal maximal_times(const Ideal& I);

}  // namespace liaison
