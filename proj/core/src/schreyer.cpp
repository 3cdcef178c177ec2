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

// Schreyer frames: each level is a Groebner basis of the image of its
// differential under the order induced by the level below.

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "liaison/resolution.hpp"

namespace liaison {

struct SchreyerFrame::Level {
  // Previous free module F_{k-1}.
  std::vector<int> prev_shifts;
  std::vector<Monomial> prev_ind;
  // Generators of the image, as columns over F_{k-1}.
  std::vector<std::vector<Polynomial>> elems;
  std::vector<int> lead_comp;
  std::vector<Monomial> lead_mono;
  std::vector<Coeff> lead_coef;
  std::vector<std::vector<int>> by_comp;

  int shift(std::size_t a) const {
    return lead_mono[a].degree() + prev_shifts[static_cast<std::size_t>(lead_comp[a])];
  }
  Monomial ind(std::size_t a) const {
    return lead_mono[a] * prev_ind[static_cast<std::size_t>(lead_comp[a])];
  }
};

namespace {

using Vec = std::vector<Polynomial>;
using Level = SchreyerFrame::Level;

struct LeadTerm {
  int comp = -1;
  Monomial mono;
  Coeff coeff = 0;
};

// Induced order: compare u * ind(c); on a tie the smaller component wins.
LeadTerm vector_lead(const Vec& v, const std::vector<Monomial>& ind, const MonomialOrder& ord) {
  LeadTerm best;
  Monomial best_key;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c].is_zero()) continue;
    const Term& t = v[c].leading();
    Monomial key = t.mono * ind[c];
    if (best.comp < 0 || detail::monomial_greater(key, best_key, ord)) {
      best = {static_cast<int>(c), t.mono, t.coeff};
      best_key = key;
    }
  }
  return best;
}

struct VectorDivision {
  Vec quotients;
  Vec remainder;
  bool exact = true;
};

VectorDivision divide_vector(const Level& L, Vec w, const Ring& ring) {
  const auto& field = ring.field;
  std::vector<std::vector<Term>> qterms(L.elems.size());
  std::vector<std::vector<Term>> rterms(w.size());
  for (;;) {
    LeadTerm lt = vector_lead(w, L.prev_ind, ring.order);
    if (lt.comp < 0) break;
    const auto c = static_cast<std::size_t>(lt.comp);
    int hit = -1;
    if (c < L.by_comp.size()) {
      for (int s : L.by_comp[c]) {
        if (L.lead_mono[static_cast<std::size_t>(s)].divides(lt.mono)) {
          hit = s;
          break;
        }
      }
    }
    if (hit < 0) {
      rterms[c].push_back({lt.mono, lt.coeff});
      w[c] = w[c] - Polynomial::term(ring, lt.mono, lt.coeff);
      continue;
    }
    const auto s = static_cast<std::size_t>(hit);
    const Monomial m = lt.mono / L.lead_mono[s];
    const Coeff f = field.mul(lt.coeff, field.inv(L.lead_coef[s]));
    qterms[s].push_back({m, f});
    const Vec& sigma = L.elems[s];
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!sigma[i].is_zero()) w[i] = w[i].sub_mul(f, m, sigma[i]);
    }
  }
  VectorDivision out;
  out.quotients.reserve(qterms.size());
  for (auto& t : qterms) out.quotients.push_back(Polynomial::from_terms(ring, std::move(t)));
  out.remainder.reserve(rterms.size());
  for (auto& t : rterms) {
    out.exact = out.exact && t.empty();
    out.remainder.push_back(Polynomial::from_terms(ring, std::move(t)));
  }
  return out;
}

// Sorts by lead component, then by descending exponent of `var`; fills the lead caches.
void finalize_level(Level& L, int var, const Ring& ring) {
  const std::size_t n = L.elems.size();
  std::vector<LeadTerm> leads(n);
  for (std::size_t a = 0; a < n; ++a) {
    leads[a] = vector_lead(L.elems[a], L.prev_ind, ring.order);
    if (leads[a].comp < 0) throw std::logic_error("zero element in a resolution level");
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (leads[a].comp != leads[b].comp) return leads[a].comp < leads[b].comp;
    return leads[a].mono[var] > leads[b].mono[var];
  });
  std::vector<Vec> elems;
  elems.reserve(n);
  L.lead_comp.clear();
  L.lead_mono.clear();
  L.lead_coef.clear();
  L.by_comp.assign(L.prev_ind.size(), {});
  for (std::size_t a : perm) {
    elems.push_back(std::move(L.elems[a]));
    L.lead_comp.push_back(leads[a].comp);
    L.lead_mono.push_back(leads[a].mono);
    L.lead_coef.push_back(leads[a].coeff);
    L.by_comp[static_cast<std::size_t>(leads[a].comp)].push_back(static_cast<int>(elems.size() - 1));
  }
  L.elems = std::move(elems);
}

std::vector<Vec> level_syzygies(const Level& L, const Ring& ring) {
  const auto& field = ring.field;
  std::vector<Vec> out;
  for (const auto& group : L.by_comp) {
    for (std::size_t ia = 0; ia < group.size(); ++ia) {
      const auto a = static_cast<std::size_t>(group[ia]);
      // Multipliers lcm(u_a, u_b) / u_a for later b, pruned to the minimal ones.
      std::vector<std::pair<Monomial, std::size_t>> cands;
      for (std::size_t ib = ia + 1; ib < group.size(); ++ib) {
        const auto b = static_cast<std::size_t>(group[ib]);
        cands.emplace_back(L.lead_mono[a].lcm(L.lead_mono[b]) / L.lead_mono[a], b);
      }
      for (std::size_t x = 0; x < cands.size(); ++x) {
        bool minimal = true;
        for (std::size_t y = 0; y < cands.size() && minimal; ++y) {
          if (x == y || !cands[y].first.divides(cands[x].first)) continue;
          minimal = !(cands[y].first == cands[x].first) ? false : x < y;
        }
        if (!minimal) continue;
        const auto& [mab, b] = cands[x];
        const Monomial mba = (mab * L.lead_mono[a]) / L.lead_mono[b];
        const Coeff ca = field.inv(L.lead_coef[a]);
        const Coeff cb = field.inv(L.lead_coef[b]);
        Vec s(L.prev_ind.size(), Polynomial(ring));
        for (std::size_t i = 0; i < s.size(); ++i) {
          s[i] = L.elems[a][i].mul_term(mab, ca) - L.elems[b][i].mul_term(mba, cb);
        }
        VectorDivision div = divide_vector(L, std::move(s), ring);
        if (!div.exact) throw std::logic_error("S-pair of a resolution level did not reduce to zero");
        Vec syz(L.elems.size(), Polynomial(ring));
        for (std::size_t i = 0; i < syz.size(); ++i) syz[i] = -div.quotients[i];
        syz[a] += Polynomial::term(ring, mab, ca);
        syz[b] -= Polynomial::term(ring, mba, cb);
        out.push_back(std::move(syz));
      }
    }
  }
  return out;
}

}  // namespace

SchreyerFrame::~SchreyerFrame() = default;
SchreyerFrame::SchreyerFrame(SchreyerFrame&&) noexcept = default;
SchreyerFrame& SchreyerFrame::operator=(SchreyerFrame&&) noexcept = default;

SchreyerFrame::SchreyerFrame(const Ideal& I) {
  const Ring& ring = I.ring();
  res_.ring = ring;
  if (I.is_zero()) return;

  Level first;
  first.prev_shifts = {0};
  first.prev_ind = {Monomial(ring.nvars)};
  for (const auto& g : I.gb()) first.elems.push_back({g});
  finalize_level(first, 0, ring);
  levels_.push_back(std::move(first));

  for (;;) {
    const Level& cur = levels_.back();
    std::vector<Vec> syz = level_syzygies(cur, ring);
    if (syz.empty()) break;
    if (static_cast<int>(levels_.size()) > ring.nvars + 1) {
      throw std::logic_error("resolution exceeded the expected length");
    }
    Level next;
    for (std::size_t a = 0; a < cur.elems.size(); ++a) {
      next.prev_shifts.push_back(cur.shift(a));
      next.prev_ind.push_back(cur.ind(a));
    }
    next.elems = std::move(syz);
    finalize_level(next, static_cast<int>(levels_.size()) % ring.nvars, ring);
    levels_.push_back(std::move(next));
  }

  for (const Level& L : levels_) {
    std::vector<int> shifts;
    for (std::size_t a = 0; a < L.elems.size(); ++a) shifts.push_back(L.shift(a));
    GradedMap d(ring, L.prev_shifts, shifts);
    for (std::size_t a = 0; a < L.elems.size(); ++a) d.set_column(static_cast<int>(a), L.elems[a]);
    res_.maps.push_back(std::move(d));
  }
}

std::vector<Polynomial> SchreyerFrame::lift(int level, const std::vector<Polynomial>& w) const {
  if (level < 1 || level > static_cast<int>(levels_.size())) {
    // Beyond the last level the differential is zero, so only zero lifts.
    for (const auto& p : w) {
      if (!p.is_zero()) throw std::domain_error("lift: element not in the image");
    }
    return {};
  }
  const Level& L = levels_[static_cast<std::size_t>(level - 1)];
  if (w.size() != L.prev_ind.size()) throw RingMismatch("lift: vector length mismatch");
  VectorDivision div = divide_vector(L, w, res_.ring);
  if (!div.exact) throw std::domain_error("lift: element not in the image");
  return div.quotients;
}

Resolution free_resolution(const Ideal& I) { return SchreyerFrame(I).resolution(); }

}  // namespace liaison
