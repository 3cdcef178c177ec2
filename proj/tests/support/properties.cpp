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

#include "properties.hpp"

#include <algorithm>
#include <numeric>

#include "liaison/betti.hpp"
#include "liaison/groebner.hpp"
#include "liaison/linkage.hpp"
#include "liaison/resolution.hpp"
#include "support.hpp"

namespace liaison::testing {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { r_.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++r_.cases;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = "case " + std::to_string(r_.cases) + ": " + what;
  }
  SuiteResult result() const { return r_; }

 private:
  SuiteResult r_;
};

std::string describe(const std::vector<Polynomial>& gens) {
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + to_string(gens[i]);
  return s + ")";
}

// Small random homogeneous ideal: 3 or 4 variables, two to four generators.
std::vector<Polynomial> small_ideal(CounterRng& rng, const Ring& ring) {
  const int count = 2 + static_cast<int>(rng.below(3));
  return random_generators(ring, rng, count, 2, 3, 5);
}

Ring small_ring(CounterRng& rng) { return Ring(kDefaultPrime, 3 + static_cast<int>(rng.below(2))); }

}  // namespace

SuiteResult spairs_reduce_to_zero(std::uint64_t seed, int cases) {
  Recorder rec("s-pairs of every basis reduce to zero");
  CounterRng rng(seed);
  for (int c = 0; c < cases; ++c) {
    const Ring ring = small_ring(rng);
    const auto gens = small_ideal(rng, ring);
    const auto gb = buchberger(gens);
    bool ok = true;
    for (std::size_t i = 0; i < gb.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < gb.size() && ok; ++j) {
        ok = normal_form(s_polynomial(gb[i], gb[j]), gb).is_zero();
      }
    }
    // Generators must also reduce to zero against their basis.
    for (const auto& g : gens) ok = ok && normal_form(g, gb).is_zero();
    rec.check(ok, describe(gens));
  }
  return rec.result();
}

SuiteResult normal_form_idempotent(std::uint64_t seed, int cases) {
  Recorder rec("normal form is idempotent");
  CounterRng rng(seed);
  for (int c = 0; c < cases; ++c) {
    const Ring ring = small_ring(rng);
    const auto gens = small_ideal(rng, ring);
    const Ideal I(ring, gens);
    const auto f = random_form(ring, 2 + static_cast<int>(rng.below(3)), rng, 6);
    const auto once = normal_form(f, I.gb());
    const auto twice = normal_form(once, I.gb());
    // The remainder differs from f by an ideal element.
    const bool same_class = I.contains(f - once);
    rec.check(once == twice && same_class, describe(gens) + " f=" + to_string(f));
  }
  return rec.result();
}

SuiteResult hilbert_numerators_agree(std::uint64_t seed, int cases) {
  Recorder rec("Hilbert numerator of the initial ideal matches the resolution");
  CounterRng rng(seed);
  for (int c = 0; c < cases; ++c) {
    const Ring ring = small_ring(rng);
    const auto gens = small_ideal(rng, ring);
    const Ideal I(ring, gens);
    std::vector<Monomial> leads;
    for (const auto& g : I.gb()) leads.push_back(g.lm());
    auto from_initial = hilbert_numerator(leads, ring.nvars);
    auto from_res = hilbert_numerator(free_resolution(I));
    auto trim = [](std::vector<std::int64_t>& v) {
      while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(from_initial);
    trim(from_res);
    rec.check(from_initial == from_res, describe(gens));
  }
  return rec.result();
}

SuiteResult resolutions_are_complexes(std::uint64_t seed, int cases) {
  Recorder rec("resolutions compose to zero with vanishing alternating rank sum");
  CounterRng rng(seed);
  for (int c = 0; c < cases; ++c) {
    const Ring ring = small_ring(rng);
    const auto gens = small_ideal(rng, ring);
    const Ideal I(ring, gens);
    const Resolution frame = free_resolution(I);
    const Resolution minimal = minimalize(frame);
    bool ok = frame.is_complex() && minimal.is_complex() && !minimal.has_unit_entry();
    for (const Resolution* r : {&frame, &minimal}) {
      std::int64_t alt = 0;
      for (int k = 0; k <= r->length(); ++k) alt += (k % 2 ? -1 : 1) * r->rank(k);
      ok = ok && alt == 0;
      for (const auto& m : r->maps) ok = ok && m.is_graded();
    }
    rec.check(ok, describe(gens));
  }
  return rec.result();
}

SuiteResult koszul_symmetry(std::uint64_t seed, int cases) {
  Recorder rec("Koszul diagrams are self-dual");
  CounterRng rng(seed);
  for (int c = 0; c < cases; ++c) {
    const int n = 1 + static_cast<int>(rng.below(7));
    std::vector<int> d;
    for (int i = 0; i < n; ++i) d.push_back(1 + static_cast<int>(rng.below(9)));
    const int alpha = std::accumulate(d.begin(), d.end(), 0);
    const auto K = koszul_diagram(d);
    bool ok = K.length() == n;
    for (const auto& [key, rank] : K.entries()) ok = ok && K.rank(n - key.first, alpha - key.second) == rank;
    std::string what = "d=";
    for (int x : d) what += std::to_string(x) + " ";
    rec.check(ok, what);
  }
  return rec.result();
}

SuiteResult equal_degree_ci(std::uint64_t seed, int cases) {
  Recorder rec("equal-degree complete intersections have degree delta^n");
  CounterRng rng(seed);
  int done = 0;
  while (done < cases) {
    const int n = 2 + static_cast<int>(rng.below(2));
    const int delta = 1 + static_cast<int>(rng.below(n == 2 ? 4 : 3));
    const Ring ring(kDefaultPrime, n + 1);
    std::vector<Polynomial> fs;
    for (int i = 0; i < n; ++i) fs.push_back(random_form(ring, delta, rng, 8));
    if (!is_regular_sequence(fs)) continue;  // rare degenerate draw
    ++done;
    std::int64_t expect = 1;
    for (int i = 0; i < n; ++i) expect *= delta;
    const auto h = hilbert_degree(Ideal(ring, fs));
    rec.check(h.degree == expect && h.codim == n, describe(fs));
  }
  return rec.result();
}

SuiteResult linkage_involution(std::uint64_t seed, int cases) {
  Recorder rec("linkage is an involution on realized instances");
  CounterRng rng(seed);
  for (int c = 0; c < cases; ++c) {
    std::vector<int> d;
    for (int i = 0; i < 3; ++i) d.push_back(2 + static_cast<int>(rng.below(2)));
    const CIType ci = CIType::make(d);
    LinkSpec spec;
    switch (rng.below(3)) {
      case 0: spec = LinkSpec::collinear(ci, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(ci.d.back())))); break;
      case 1: spec = LinkSpec::three_points(ci); break;
      default: spec = LinkSpec::custom(ci, {1, 1, 1 + static_cast<int>(rng.below(2))}); break;
    }
    try {
      const auto inst = realize(spec, kDefaultPrime, rng.next());
      const bool ok = colon_ideal(inst.IX, inst.IZ) == inst.IY && colon_ideal(inst.IX, inst.IY) == inst.IZ &&
                      hilbert_degree(inst.IX).degree ==
                          hilbert_degree(inst.IY).degree + hilbert_degree(inst.IZ).degree;
      rec.check(ok, spec.label());
    } catch (const DegenerateRealization&) {
      rec.check(false, spec.label() + " degenerate");
    }
  }
  return rec.result();
}

SuiteResult dual_twist_involution(std::uint64_t seed, int cases) {
  Recorder rec("dual twist is an involution");
  CounterRng rng(seed);
  for (int c = 0; c < cases; ++c) {
    BettiDiagram d;
    const int len = static_cast<int>(rng.below(6));
    const int entries = 1 + static_cast<int>(rng.below(8));
    for (int e = 0; e < entries; ++e) {
      const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(len) + 1));
      d.add(i, i + static_cast<int>(rng.below(10)), 1 + static_cast<int>(rng.below(4)));
    }
    const int alpha = static_cast<int>(rng.below(30));
    const int length = d.length() + static_cast<int>(rng.below(3));
    const auto back = dual_twist(dual_twist(d, alpha, length), alpha, length);
    bool ok = back == d;
    // And it is not the identity unless the diagram is symmetric.
    const auto once = dual_twist(d, alpha, length);
    for (const auto& [key, rank] : d.entries()) ok = ok && once.rank(length - key.first, alpha - key.second) == rank;
    rec.check(ok, "alpha=" + std::to_string(alpha) + " length=" + std::to_string(length));
  }
  return rec.result();
}

std::vector<SuiteResult> all_property_suites(std::uint64_t seed, int cases) {
  return {spairs_reduce_to_zero(seed, cases),   normal_form_idempotent(seed + 1, cases),
          hilbert_numerators_agree(seed + 2, cases), resolutions_are_complexes(seed + 3, cases),
          koszul_symmetry(seed + 4, cases),     equal_degree_ci(seed + 5, cases),
          linkage_involution(seed + 6, cases),  dual_twist_involution(seed + 7, cases)};
}

}  // namespace liaison::testing
