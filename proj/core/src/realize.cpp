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

// Concrete linked instances and the kernel cross-check.

#include <algorithm>
#include <functional>

#include "liaison/linkage.hpp"
#include "liaison/random.hpp"

namespace liaison {

namespace {

constexpr int kRetryCap = 16;

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      cur.set(var, left);
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur.set(var, e);
      rec(var + 1, left - e);
    }
  };
  rec(0, degree);
  return out;
}

Polynomial random_form(const Ring& ring, int degree, CounterRng& rng) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(ring.nvars, degree)) {
    terms.push_back({m, static_cast<Coeff>(rng.below(ring.prime()))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial power(const Polynomial& x, int e) {
  Polynomial out = Polynomial::constant(x.ring(), 1);
  for (int i = 0; i < e; ++i) out = out * x;
  return out;
}

std::vector<Polynomial> residual_generators(const LinkSpec& spec, const Ring& ring, CounterRng& rng) {
  const int n = spec.n();
  auto x = [&](int i) { return Polynomial::variable(ring, i); };
  std::vector<Polynomial> gens;
  switch (spec.kind) {
    case ResidualKind::kCollinear: {
      for (int i = 1; i < n; ++i) gens.push_back(x(i));
      // Monic binary form of degree t in x0 and xn.
      Polynomial g = power(x(0), spec.t);
      for (int k = 1; k <= spec.t; ++k) {
        const auto c = static_cast<std::int64_t>(rng.below(ring.prime()));
        g += (power(x(0), spec.t - k) * power(x(n), k)) * Polynomial::constant(ring, c);
      }
      gens.push_back(g);
      break;
    }
    case ResidualKind::kThreePoints:
      for (int i = 3; i <= n; ++i) gens.push_back(x(i));
      gens.push_back(x(0) * x(1));
      gens.push_back(x(0) * x(2));
      gens.push_back(x(1) * x(2));
      break;
    case ResidualKind::kCustom:
      for (int i = 1; i <= n; ++i) gens.push_back(power(x(i), spec.e[static_cast<std::size_t>(i - 1)]));
      break;
  }
  return gens;
}

}  // namespace

LinkInstance realize(const LinkSpec& spec, std::uint32_t prime, std::uint64_t seed) {
  const int n = spec.n();
  const Ring ring(prime, n + 1);
  CounterRng base(seed);
  CounterRng zrng = base.split(0);
  const std::vector<Polynomial> zgens = residual_generators(spec, ring, zrng);
  Ideal IZ(ring, zgens);

  std::vector<std::uint64_t> trail;
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    CounterRng rng = base.split(static_cast<std::uint64_t>(attempt) + 1);
    trail.push_back(rng.seed());
    std::vector<Polynomial> fs;
    for (int di : spec.ci.d) {
      Polynomial f(ring);
      for (const auto& z : zgens) {
        if (z.degree() <= di) f += random_form(ring, di - z.degree(), rng) * z;
      }
      fs.push_back(std::move(f));
    }
    if (std::any_of(fs.begin(), fs.end(), [](const Polynomial& f) { return f.is_zero(); })) continue;
    if (!is_regular_sequence(fs)) continue;
    Ideal IX(ring, fs);
    Ideal IY = link_ideal(IX, IZ);
    if (!(colon_ideal(IX, IY) == IZ)) continue;
    return LinkInstance{spec, prime, seed, std::move(trail), std::move(fs), std::move(IX), std::move(IZ),
                        std::move(IY)};
  }
  throw DegenerateRealization("no regular sequence found for " + spec.label() + " after " +
                                  std::to_string(kRetryCap) + " attempts",
                              std::move(trail));
}

OracleResult oracle_check(const LinkInstance& inst) {
  OracleResult r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.mismatches.push_back(inst.spec.label() + ": " + std::move(msg));
  };
  const LinkSpec& spec = inst.spec;
  const int n = spec.n();
  const int alpha = spec.ci.alpha();
  const Ring& ring = inst.IX.ring();

  MappingCone cone = mapping_cone_resolution(inst.ci_generators, inst.IZ);
  r.cone = betti(cone.complex);
  r.predicted = mapping_cone_diagram(koszul_diagram(spec.ci.d), cone.residual_betti, alpha);
  if (!(r.cone == r.predicted)) fail("kernel mapping cone differs from the shift-level cone");
  if (!cone.complex.is_complex()) fail("mapping cone is not a complex");

  switch (spec.kind) {
    case ResidualKind::kThreePoints:
      if (!(cone.residual_betti == three_points_diagram(n))) fail("three-point residual diagram");
      break;
    case ResidualKind::kCollinear: {
      std::vector<int> e(static_cast<std::size_t>(n - 1), 1);
      e.push_back(spec.t);
      if (!(cone.residual_betti == koszul_diagram(e))) fail("collinear residual is not a CI");
      break;
    }
    case ResidualKind::kCustom:
      if (!(cone.residual_betti == koszul_diagram(spec.e))) fail("residual is not a CI");
      break;
  }

  const HilbertData hy = hilbert_degree(inst.IY);
  r.degree = hy.degree;
  if (hy.degree != spec.ci.degree() - spec.degree_z()) fail("degree is not additive");
  if (hilbert_numerator(cone.complex) != hy.numerator) fail("Hilbert numerators disagree");

  std::vector<Polynomial> d1;
  if (!cone.complex.maps.empty()) {
    const GradedMap& m = cone.complex.maps.front();
    for (int c = 0; c < m.cols(); ++c) d1.push_back(m.at(0, c));
  }
  if (!(Ideal(ring, d1) == inst.IY)) fail("cone generators do not generate I_Y");

  const Resolution minimal = minimalize(cone.complex);
  r.minimal = betti(minimal);
  if (minimal.has_unit_entry() || !minimal.is_complex()) fail("minimalized cone is not minimal");
  if (!(betti(minimalize(free_resolution(inst.IY))) == r.minimal)) {
    fail("minimal diagram differs from the direct resolution of I_Y");
  }
  for (int i = 1; i <= r.minimal.length(); ++i) {
    if (r.minimal.min_shift(i) < r.cone.min_shift(i) || r.minimal.max_shift(i) > r.cone.max_shift(i)) {
      fail("pruning widened the shift range in column " + std::to_string(i));
    }
  }
  if (minimality_test(inst.IX, inst.IZ) && !(r.minimal == r.cone)) {
    fail("cone should already be minimal");
  }

  if (spec.kind != ResidualKind::kThreePoints) {
    const int a = spec.extra_degree();
    const auto gens = r.minimal.shifts(1);
    const bool has_extra = std::find(gens.begin(), gens.end(), a) != gens.end();
    const bool within = std::all_of(gens.begin(), gens.end(), [&](int s) {
      return s == a || std::find(spec.ci.d.begin(), spec.ci.d.end(), s) != spec.ci.d.end();
    });
    if (!has_extra || !within) fail("linked ideal is not I_X plus one form of degree " + std::to_string(a));
  }

  r.observed = ShiftProfile::from_diagram(r.minimal, hy.degree, "observed");
  std::vector<ShiftProfile> profiles;
  if (spec.kind == ResidualKind::kCollinear) profiles = collinear_profile(spec.ci, spec.t);
  if (spec.kind == ResidualKind::kThreePoints) profiles = threepoints_profile(spec.ci).profiles;
  if (!profiles.empty()) {
    for (const auto& p : profiles) {
      if (p.p == r.observed.p && p.same_shifts(r.observed)) {
        r.matched_scenario = p.scenario;
        break;
      }
    }
    if (r.matched_scenario.empty()) fail("minimal shifts match no profile scenario");
  }
  return r;
}

}  // namespace liaison
