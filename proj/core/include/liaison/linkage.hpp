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
#include <vector>

#include "liaison/betti.hpp"
#include "liaison/groebner.hpp"
#include "liaison/resolution.hpp"

namespace liaison {

/// Degrees of a complete intersection, sorted ascending.
struct CIType {
  std::vector<int> d;

  /// Sorts the degrees; rejects entries below `min_degree` or fewer than
  /// `min_length` of them.
  static CIType make(std::vector<int> degrees, int min_length = 3, int min_degree = 2);

  int n() const { return static_cast<int>(d.size()); }
  int alpha() const;
  std::int64_t degree() const;
  std::string label() const;
};

enum class ResidualKind { kCollinear, kThreePoints, kCustom };

struct LinkSpec {
  CIType ci;
  ResidualKind kind = ResidualKind::kCollinear;
  int t = 0;           // collinear residual degree
  std::vector<int> e;  // custom residual CI type

  static LinkSpec collinear(const CIType& ci, int t);
  static LinkSpec three_points(const CIType& ci);
  static LinkSpec custom(const CIType& ci, std::vector<int> e);

  int n() const { return ci.n(); }
  /// Socle twist of the residual when it is a complete intersection.
  int alpha_z() const;
  std::int64_t degree_z() const;
  /// Degree of the extra generator of the linked ideal for CI residuals.
  int extra_degree() const { return ci.alpha() - alpha_z(); }
  std::string label() const;
};

/// Minimum and maximum shifts per homological step, with the degree the
/// bounds are compared against.
struct ShiftProfile {
  int p = 0;
  std::vector<int> m;
  std::vector<int> M;
  std::int64_t degree = 0;
  std::string scenario;

  static ShiftProfile from_diagram(const BettiDiagram& d, std::int64_t degree, std::string scenario);
  bool same_shifts(const ShiftProfile& o) const { return m == o.m && M == o.M; }
};

struct LinkInstance {
  LinkSpec spec;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> seed_trail;
  std::vector<Polynomial> ci_generators;
  Ideal IX;
  Ideal IZ;
  Ideal IY;
};

/// Realization retries ran out; carries the per-attempt seeds.
class DegenerateRealization : public std::runtime_error {
 public:
  DegenerateRealization(const std::string& what, std::vector<std::uint64_t> trail)
      : std::runtime_error(what), trail_(std::move(trail)) {}
  const std::vector<std::uint64_t>& seed_trail() const { return trail_; }

 private:
  std::vector<std::uint64_t> trail_;
};

/// Koszul complex of fs; basis of step i is the i-subsets in lexicographic order.
Resolution koszul_complex(std::span<const Polynomial> fs);

/// Mapping cone resolution of R/(I_X : I_Z) built from honest matrices: the
/// Koszul complex of the regular sequence, a minimal resolution of R/I_Z and
/// a lifted comparison map between them. The unit pair in the top degree is
/// cancelled, so the Betti diagram has the shape of mapping_cone_diagram.
struct MappingCone {
  Resolution complex;
  Resolution residual;  // minimal resolution of R/I_Z
  BettiDiagram residual_betti;
};
MappingCone mapping_cone_resolution(std::span<const Polynomial> ci_generators, const Ideal& IZ);

/// I_X : I_Z. Rejects I_X not contained in I_Z.
Ideal link_ideal(const Ideal& IX, const Ideal& IZ);

/// True iff every generator of I_X lies in m * I_Z.
bool minimality_test(const Ideal& IX, const Ideal& IZ);

/// Profiles for a residual cut out by n-1 linear forms and one form of degree t.
std::vector<ShiftProfile> collinear_profile(const CIType& ci, int t);

struct ThreePointPrediction {
  std::vector<ShiftProfile> profiles;
  BettiDiagram nonminimal;
  BettiDiagram residual;
};
/// Profiles for a residual of three non-collinear points.
ThreePointPrediction threepoints_profile(const CIType& ci);

/// Predicted minimal Betti diagram of three coordinate points in P^n.
BettiDiagram three_points_diagram(int n);

LinkInstance realize(const LinkSpec& spec, std::uint32_t prime, std::uint64_t seed);

struct OracleResult {
  bool ok = true;
  std::vector<std::string> mismatches;
  BettiDiagram cone;           // kernel mapping cone, before minimalization
  BettiDiagram predicted;      // shift-level mapping cone
  BettiDiagram minimal;        // after minimalization
  std::int64_t degree = 0;
  std::string matched_scenario;
  ShiftProfile observed;
};

/// Cross-checks a realized instance: degree additivity, the kernel cone
/// against the shift-level cone, Hilbert numerators, generators of I_Y, and
/// the minimal shifts against the profile scenarios.
OracleResult oracle_check(const LinkInstance& inst);

}  // namespace liaison
