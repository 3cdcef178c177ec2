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

// Test-side helpers: random inputs and a dense GF(p) linear-algebra model of
// graded components. Nothing here calls into the Groebner machinery, so the
// component dimensions serve as an independent reference.

#pragma once

#include <unordered_map>
#include <vector>

#include "liaison/random.hpp"
#include "liaison/ring.hpp"

namespace liaison::testing {

/// All monomials of one degree, in a fixed enumeration order.
inline std::vector<Monomial> monomials(int nvars, int degree) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
  };
  if (nvars > 0 && degree >= 0) rec(rec, 0, degree);
  return out;
}

/// Homogeneous form with up to `max_terms` random terms (nonzero unless the
/// draw cancels everything, which the callers retry on).
inline Polynomial random_form(const Ring& ring, int degree, CounterRng& rng, int max_terms) {
  const auto basis = monomials(ring.nvars, degree);
  const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
  std::vector<Term> terms;
  for (int i = 0; i < k; ++i) {
    const auto& m = basis[rng.below(basis.size())];
    terms.push_back({m, static_cast<Coeff>(1 + rng.below(ring.prime() - 1))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

inline std::vector<Polynomial> random_generators(const Ring& ring, CounterRng& rng, int count, int min_deg,
                                                 int max_deg, int max_terms) {
  std::vector<Polynomial> gens;
  while (static_cast<int>(gens.size()) < count) {
    const int d = min_deg + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg - min_deg + 1)));
    auto f = random_form(ring, d, rng, max_terms);
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
  return gens;
}

/// Row-reduces `rows` in place over GF(p) and returns the rank.
inline int row_rank(std::vector<std::vector<Coeff>> rows, const PrimeField& F) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    auto& p = rows[static_cast<std::size_t>(rank)];
    const Coeff inv = F.inv(p[c]);
    for (auto& x : p) x = F.mul(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const Coeff f = rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] = F.sub(rows[r][j], F.mul(f, p[j]));
    }
    ++rank;
  }
  return rank;
}

/// Coordinates of homogeneous polynomials of one degree.
class Component {
 public:
  Component(const Ring& ring, int degree) : ring_(ring), basis_(monomials(ring.nvars, degree)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<int>(i));
  }

  int size() const { return static_cast<int>(basis_.size()); }
  const std::vector<Monomial>& basis() const { return basis_; }

  std::vector<Coeff> coords(const Polynomial& f) const {
    std::vector<Coeff> v(basis_.size(), 0);
    for (const auto& t : f.terms()) v[static_cast<std::size_t>(index_.at(t.mono))] = t.coeff;
    return v;
  }

  /// Spanning rows of the degree-d part of the ideal generated by `gens`.
  std::vector<std::vector<Coeff>> ideal_rows(const std::vector<Polynomial>& gens, int degree) const {
    std::vector<std::vector<Coeff>> rows;
    for (const auto& g : gens) {
      const int e = degree - g.degree();
      if (g.is_zero() || e < 0) continue;
      for (const auto& m : monomials(ring_.nvars, e)) rows.push_back(coords(g.mul_term(m, 1)));
    }
    return rows;
  }

 private:
  Ring ring_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, int> index_;
};

/// dim_k of (ideal generated by gens)_degree.
inline int component_dim(const Ring& ring, const std::vector<Polynomial>& gens, int degree) {
  const Component c(ring, degree);
  return row_rank(c.ideal_rows(gens, degree), ring.field);
}

/// dim of (I ∩ J)_degree = dim I + dim J - dim(I + J).
inline int intersection_dim(const Ring& ring, const std::vector<Polynomial>& I, const std::vector<Polynomial>& J,
                            int degree) {
  const Component c(ring, degree);
  auto a = c.ideal_rows(I, degree);
  auto b = c.ideal_rows(J, degree);
  const int da = row_rank(a, ring.field), db = row_rank(b, ring.field);
  a.insert(a.end(), b.begin(), b.end());
  return da + db - row_rank(a, ring.field);
}

/// dim of (I : f)_degree: degree-`degree` forms g with g f in I.
inline int colon_dim(const Ring& ring, const std::vector<Polynomial>& I, const Polynomial& f, int degree) {
  const int target = degree + f.degree();
  const Component src(ring, degree), dst(ring, target);
  auto rows = dst.ideal_rows(I, target);
  const int base = row_rank(rows, ring.field);
  for (const auto& m : src.basis()) rows.push_back(dst.coords(f.mul_term(m, 1)));
  const int image = row_rank(rows, ring.field) - base;
  return src.size() - image;
}

}  // namespace liaison::testing
