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

#include "liaison/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>

namespace liaison {

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t seq;
};

// Buchberger state with the Gebauer-Moeller pair update.
class BuchbergerRun {
 public:
  explicit BuchbergerRun(const Ring& ring) : ring_(ring) {}

  void add_generator(const Polynomial& f) {
    Polynomial h = reduce(f);
    if (!h.is_zero()) insert(h.monic());
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
        if (it->lcm.degree() < best->lcm.degree() ||
            (it->lcm.degree() == best->lcm.degree() && it->seq < best->seq)) {
          best = it;
        }
      }
      CriticalPair p = *best;
      pairs_.erase(best);
      Polynomial h = reduce(s_polynomial(basis_[p.i], basis_[p.j]));
      if (!h.is_zero()) insert(h.monic());
    }
  }

  std::vector<Polynomial> active() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (active_[k]) out.push_back(basis_[k]);
    }
    return out;
  }

 private:
  Polynomial reduce(const Polynomial& f) const {
    if (active_list_.empty()) return f;
    return normal_form(f, active_list_);
  }

  void insert(Polynomial h) {
    const std::size_t hn = basis_.size();
    const Monomial& lh = h.lm();

    // Candidate pairs (h, g) for active g, pruned by the chain criterion.
    std::vector<std::pair<std::size_t, Monomial>> cands;
    for (std::size_t g = 0; g < basis_.size(); ++g) {
      if (active_[g]) cands.emplace_back(g, lh.lcm(basis_[g].lm()));
    }
    std::vector<std::pair<std::size_t, Monomial>> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const auto& [g1, l1] = cands[a];
      bool keep = lh.coprime(basis_[g1].lm());
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b) {
          if (cands[b].second.divides(l1)) keep = false;
        }
        for (const auto& [g2, l2] : kept) {
          if (!keep) break;
          if (l2.divides(l1)) keep = false;
        }
      }
      if (keep) kept.emplace_back(g1, l1);
    }

    // Drop old pairs whose lcm is strictly covered through h.
    std::erase_if(pairs_, [&](const CriticalPair& p) {
      if (!lh.divides(p.lcm)) return false;
      const Monomial li = lh.lcm(basis_[p.i].lm());
      const Monomial lj = lh.lcm(basis_[p.j].lm());
      return !(li == p.lcm) && !(lj == p.lcm);
    });

    for (const auto& [g, l] : kept) {
      if (lh.coprime(basis_[g].lm())) continue;  // Buchberger's first criterion
      pairs_.push_back({g, hn, l, next_seq_++});
    }

    for (std::size_t g = 0; g < basis_.size(); ++g) {
      if (active_[g] && lh.divides(basis_[g].lm())) active_[g] = false;
    }
    basis_.push_back(std::move(h));
    active_.push_back(true);

    active_list_.clear();
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (active_[k]) active_list_.push_back(basis_[k]);
    }
  }

  Ring ring_;
  std::vector<Polynomial> basis_;
  std::vector<bool> active_;
  std::vector<Polynomial> active_list_;
  std::vector<CriticalPair> pairs_;
  std::uint64_t next_seq_ = 0;
};

std::vector<Polynomial> sorted_desc(std::vector<Polynomial> v) {
  if (v.empty()) return v;
  const auto& ord = v.front().ring().order;
  std::sort(v.begin(), v.end(), [&](const Polynomial& a, const Polynomial& b) {
    return detail::monomial_greater(a.lm(), b.lm(), ord);
  });
  return v;
}

}  // namespace

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis) {
  std::erase_if(basis, [](const Polynomial& p) { return p.is_zero(); });
  if (basis.empty()) return basis;
  for (const auto& g : basis) {
    if (g.is_unit()) return {Polynomial::constant(g.ring(), 1)};
  }
  // Minimal basis: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b) continue;
      if (basis[b].lm().divides(basis[a].lm())) {
        // Equal leading monomials: keep the first occurrence.
        redundant = !(basis[a].lm() == basis[b].lm()) || b < a;
      }
    }
    if (!redundant) minimal.push_back(basis[a]);
  }
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) others.push_back(minimal[b]);
    }
    Polynomial r = others.empty() ? minimal[a] : normal_form(minimal[a], others);
    out.push_back(r.monic());
  }
  return sorted_desc(std::move(out));
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) return {};
  const Ring& ring = nonzero.front().ring();
  for (const auto& g : nonzero) {
    if (!(g.ring() == ring)) throw RingMismatch("generators from different rings");
    if (g.is_unit()) return {Polynomial::constant(ring, 1)};
  }
  BuchbergerRun run(ring);
  for (const auto& g : nonzero) run.add_generator(g);
  run.run();
  return reduce_basis(run.active());
}

// --------------------------------------------------------------------- Ideal

Ideal::Ideal(const Ring& ring, std::vector<Polynomial> generators) : ring_(ring) {
  for (auto& g : generators) {
    if (!(g.ring() == ring)) throw RingMismatch("ideal generator from a different ring");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) {
      throw std::invalid_argument("inhomogeneous generator: " + to_string(g));
    }
    generators_.push_back(std::move(g));
  }
  gb_ = buchberger(generators_);
}

Polynomial Ideal::reduce(const Polynomial& f) const {
  if (!(f.ring() == ring_)) throw RingMismatch("polynomial from a different ring");
  if (gb_.empty()) return f;
  return normal_form(f, gb_);
}

bool Ideal::contains(const Polynomial& f) const { return reduce(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.gb_) {
    if (!contains(g)) return false;
  }
  return true;
}

bool Ideal::operator==(const Ideal& other) const {
  return ring_ == other.ring_ && gb_ == other.gb_;
}

// ------------------------------------------------------------ ideal algebra

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!(I.ring() == J.ring())) throw RingMismatch("intersecting ideals of different rings");
  const Ring& ring = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal::zero(ring);
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  if (I.contains(J)) return J;
  if (J.contains(I)) return I;

  const Ring big(ring.prime(), ring.nvars + 1, MonomialOrder::elimination(1));
  const Polynomial t = Polynomial::variable(big, 0);
  const Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.gb()) gens.push_back(t * f.change_ring(big, 1));
  for (const auto& g : J.gb()) gens.push_back(one_minus_t * g.change_ring(big, 1));

  std::vector<Polynomial> kept;
  for (const auto& g : buchberger(gens)) {
    if (g.lm()[0] == 0) kept.push_back(g.project_ring(ring, 1));
  }
  return Ideal(ring, std::move(kept));
}

Ideal colon(const Ideal& I, const Polynomial& f) {
  if (!(f.ring() == I.ring())) throw RingMismatch("colon by a polynomial of another ring");
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  if (!f.is_homogeneous()) throw std::invalid_argument("colon by an inhomogeneous polynomial");
  if (f.is_unit()) return I;
  if (I.contains(f)) return Ideal::unit(I.ring());
  const Ideal principal(I.ring(), {f});
  const Ideal both = intersect(I, principal);
  std::vector<Polynomial> quotients;
  quotients.reserve(both.gb().size());
  for (const auto& g : both.gb()) quotients.push_back(divide_exact(g, f));
  return Ideal(I.ring(), std::move(quotients));
}

Ideal colon_ideal(const Ideal& I, const Ideal& J) {
  if (!(I.ring() == J.ring())) throw RingMismatch("colon of ideals of different rings");
  if (J.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    Ideal c = colon(I, g);
    if (c.is_unit()) continue;
    acc = acc ? intersect(*acc, c) : std::move(c);
  }
  return acc ? *acc : Ideal::unit(I.ring());
}

int monomial_dimension(std::span<const Monomial> generators, int nvars) {
  std::vector<std::uint32_t> supports;
  supports.reserve(generators.size());
  for (const auto& m : generators) {
    std::uint32_t s = 0;
    for (int i = 0; i < nvars; ++i) {
      if (m[i] != 0) s |= 1u << i;
    }
    if (s == 0) return -1;  // unit ideal
    supports.push_back(s);
  }
  int best = -1;
  const std::uint32_t full = nvars >= 32 ? ~0u : ((1u << nvars) - 1);
  for (std::uint32_t mask = 0;; ++mask) {
    const int size = std::popcount(mask);
    if (size > best) {
      bool ok = true;
      for (auto s : supports) {
        if ((s & mask) == s) {
          ok = false;
          break;
        }
      }
      if (ok) best = size;
    }
    if (mask == full) break;
  }
  return best;
}

int codim(const Ideal& I) {
  if (I.is_zero()) return 0;
  std::vector<Monomial> leads;
  leads.reserve(I.gb().size());
  for (const auto& g : I.gb()) leads.push_back(g.lm());
  // The unit ideal reports nvars + 1 (empty variety).
  return I.nvars() - monomial_dimension(leads, I.nvars());
}

bool is_regular_sequence(std::span<const Polynomial> fs) {
  if (fs.empty()) return true;
  for (const auto& f : fs) {
    if (f.is_zero()) throw std::invalid_argument("regular sequence with a zero element");
  }
  const Ideal I(fs.front().ring(), {fs.begin(), fs.end()});
  return !I.is_unit() && codim(I) == static_cast<int>(fs.size());
}

Ideal maximal_times(const Ideal& I) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) {
    for (int k = 0; k < I.nvars(); ++k) gens.push_back(g * Polynomial::variable(I.ring(), k));
  }
  return Ideal(I.ring(), std::move(gens));
}

}  // namespace liaison
