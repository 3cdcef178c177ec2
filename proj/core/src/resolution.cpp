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

#include "liaison/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace liaison {

// ----------------------------------------------------------------- GradedMap

GradedMap::GradedMap(const Ring& ring, std::vector<int> target_shifts,
                     std::vector<int> source_shifts)
    : ring_(ring),
      target_(std::move(target_shifts)),
      source_(std::move(source_shifts)),
      entries_(target_.size() * source_.size(), Polynomial(ring)) {}

std::vector<Polynomial> GradedMap::column(int c) const {
  std::vector<Polynomial> v;
  v.reserve(target_.size());
  for (int r = 0; r < rows(); ++r) v.push_back(at(r, c));
  return v;
}

void GradedMap::set_column(int c, const std::vector<Polynomial>& v) {
  if (static_cast<int>(v.size()) != rows()) throw RingMismatch("column length mismatch");
  for (int r = 0; r < rows(); ++r) at(r, c) = v[static_cast<std::size_t>(r)];
}

bool GradedMap::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

bool GradedMap::is_graded() const {
  for (int r = 0; r < rows(); ++r) {
    for (int c = 0; c < cols(); ++c) {
      const Polynomial& e = at(r, c);
      if (e.is_zero()) continue;
      const int want = source_[static_cast<std::size_t>(c)] - target_[static_cast<std::size_t>(r)];
      if (!e.is_homogeneous() || e.degree() != want) return false;
    }
  }
  return true;
}

bool GradedMap::find_unit(int& r, int& c) const {
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) {
      if (at(i, j).is_unit()) {
        r = i;
        c = j;
        return true;
      }
    }
  }
  return false;
}

void GradedMap::remove_row(int r) {
  std::vector<Polynomial> next;
  next.reserve(entries_.size() - source_.size());
  for (int i = 0; i < rows(); ++i) {
    if (i == r) continue;
    for (int j = 0; j < cols(); ++j) next.push_back(std::move(at(i, j)));
  }
  entries_ = std::move(next);
  target_.erase(target_.begin() + r);
}

void GradedMap::remove_column(int c) {
  std::vector<Polynomial> next;
  next.reserve(entries_.size() - target_.size());
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) {
      if (j != c) next.push_back(std::move(at(i, j)));
    }
  }
  entries_ = std::move(next);
  source_.erase(source_.begin() + c);
}

void GradedMap::row_axpy(int i, const Polynomial& factor, int src) {
  if (factor.is_zero()) return;
  for (int j = 0; j < cols(); ++j) {
    const Polynomial& s = at(src, j);
    if (!s.is_zero()) at(i, j) -= factor * s;
  }
}

GradedMap compose(const GradedMap& a, const GradedMap& b) {
  if (!(a.ring() == b.ring()) || a.source_shifts() != b.target_shifts()) {
    throw RingMismatch("composing maps with mismatched modules");
  }
  GradedMap out(a.ring(), a.target_shifts(), b.source_shifts());
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = 0; k < a.cols(); ++k) {
      const Polynomial& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < b.cols(); ++c) {
        const Polynomial& y = b.at(k, c);
        if (!y.is_zero()) out.at(r, c) += x * y;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- Resolution

int Resolution::rank(int k) const { return static_cast<int>(shifts(k).size()); }

std::vector<int> Resolution::shifts(int k) const {
  if (k == 0) return maps.empty() ? std::vector<int>{0} : maps.front().target_shifts();
  if (k < 0 || k > length()) return {};
  return maps[static_cast<std::size_t>(k - 1)].source_shifts();
}

bool Resolution::is_complex() const {
  for (std::size_t k = 1; k < maps.size(); ++k) {
    if (maps[k - 1].source_shifts() != maps[k].target_shifts()) return false;
    if (!compose(maps[k - 1], maps[k]).is_zero()) return false;
  }
  return true;
}

bool Resolution::has_unit_entry() const {
  int r = 0;
  int c = 0;
  return std::any_of(maps.begin(), maps.end(),
                     [&](const GradedMap& m) { return m.find_unit(r, c); });
}

void cancel_unit(Resolution& res, int k, int r, int c, std::vector<GradedMap>* tracked) {
  if (k < 0 || k >= res.length()) throw std::out_of_range("cancel_unit: map index");
  GradedMap& d = res.maps[static_cast<std::size_t>(k)];
  if (!d.at(r, c).is_unit()) throw std::invalid_argument("cancel_unit: entry is not a unit");
  const Ring& ring = d.ring();
  const Coeff uinv = ring.field.inv(d.at(r, c).lc());

  // Factors d[i][c] / u, read before the column is cleared.
  std::vector<Polynomial> factor(static_cast<std::size_t>(d.rows()), Polynomial(ring));
  for (int i = 0; i < d.rows(); ++i) {
    if (i != r) factor[static_cast<std::size_t>(i)] = d.at(i, c).scaled(uinv);
  }
  for (int i = 0; i < d.rows(); ++i) {
    if (i != r) d.row_axpy(i, factor[static_cast<std::size_t>(i)], r);
  }
  d.remove_row(r);
  d.remove_column(c);
  if (k + 1 < res.length()) res.maps[static_cast<std::size_t>(k + 1)].remove_row(c);
  if (k >= 1) res.maps[static_cast<std::size_t>(k - 1)].remove_column(r);

  if (tracked) {
    // Source module of d is F_{k+1}, target is F_k.
    const auto src = static_cast<std::size_t>(k + 1);
    const auto tgt = static_cast<std::size_t>(k);
    if (src < tracked->size()) (*tracked)[src].remove_row(c);
    if (tgt < tracked->size()) {
      GradedMap& t = (*tracked)[tgt];
      for (int i = 0; i < t.rows(); ++i) {
        if (i != r) t.row_axpy(i, factor[static_cast<std::size_t>(i)], r);
      }
      t.remove_row(r);
    }
  }
  while (!res.maps.empty() && res.maps.back().cols() == 0) res.maps.pop_back();
}

Resolution minimalize(Resolution res, std::vector<GradedMap>* tracked) {
  for (;;) {
    bool found = false;
    for (int k = 0; k < res.length() && !found; ++k) {
      int r = 0;
      int c = 0;
      if (res.maps[static_cast<std::size_t>(k)].find_unit(r, c)) {
        cancel_unit(res, k, r, c, tracked);
        found = true;
      }
    }
    if (!found) break;
  }
  res.minimal = true;
  return res;
}

BettiDiagram betti(const Resolution& res) {
  BettiDiagram d;
  for (int k = 0; k <= res.length(); ++k) {
    for (int s : res.shifts(k)) d.add(k, s);
  }
  return d;
}

// ------------------------------------------------------------------- Hilbert

namespace {

using Series = std::vector<std::int64_t>;

void add_shifted(Series& acc, const Series& s, int shift, std::int64_t sign) {
  if (acc.size() < s.size() + static_cast<std::size_t>(shift)) {
    acc.resize(s.size() + static_cast<std::size_t>(shift), 0);
  }
  for (std::size_t k = 0; k < s.size(); ++k) acc[k + static_cast<std::size_t>(shift)] += sign * s[k];
}

std::vector<Monomial> minimize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool covered = std::any_of(out.begin(), out.end(),
                               [&](const Monomial& o) { return o.divides(m); });
    if (!covered) out.push_back(m);
  }
  return out;
}

int support_size(const Monomial& m, int nvars) {
  int s = 0;
  for (int i = 0; i < nvars; ++i) s += m[i] != 0;
  return s;
}

// Pivot recursion: N(I) = N(I + p) + t^deg(p) N(I : p), p a variable power.
Series monomial_numerator(std::vector<Monomial> gens, int nvars) {
  gens = minimize_monomials(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};

  const Monomial* mixed = nullptr;
  for (const auto& m : gens) {
    if (support_size(m, nvars) > 1) {
      mixed = &m;
      break;
    }
  }
  if (!mixed) {
    // Pure powers of distinct variables: a product of (1 - t^e).
    Series acc{1};
    for (const auto& m : gens) {
      Series next(acc.size() + static_cast<std::size_t>(m.degree()), 0);
      add_shifted(next, acc, 0, 1);
      add_shifted(next, acc, m.degree(), -1);
      acc = std::move(next);
    }
    return acc;
  }

  int var = -1;
  int best = -1;
  for (int i = 0; i < nvars; ++i) {
    if ((*mixed)[i] == 0) continue;
    int count = 0;
    for (const auto& m : gens) count += m[i] != 0;
    if (count > best) {
      best = count;
      var = i;
    }
  }
  const Monomial pivot = Monomial::variable(nvars, var, (*mixed)[var]);

  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto& m : gens) quotient.push_back(m / m.gcd(pivot));

  Series out = monomial_numerator(std::move(plus), nvars);
  add_shifted(out, monomial_numerator(std::move(quotient), nvars), pivot.degree(), 1);
  return out;
}

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(std::span<const Monomial> monomials, int nvars) {
  Series s = monomial_numerator({monomials.begin(), monomials.end()}, nvars);
  trim(s);
  return s;
}

std::vector<std::int64_t> hilbert_numerator(const Resolution& res) {
  Series s;
  for (int k = 0; k <= res.length(); ++k) {
    const std::int64_t sign = k % 2 == 0 ? 1 : -1;
    for (int shift : res.shifts(k)) {
      if (shift < 0) throw std::invalid_argument("negative shift in resolution");
      if (s.size() <= static_cast<std::size_t>(shift)) s.resize(static_cast<std::size_t>(shift) + 1, 0);
      s[static_cast<std::size_t>(shift)] += sign;
    }
  }
  trim(s);
  return s;
}

HilbertData hilbert_from_numerator(std::vector<std::int64_t> numerator, int nvars) {
  trim(numerator);
  HilbertData h;
  h.numerator = numerator;
  h.nvars = nvars;
  if (numerator.empty()) {
    h.unit_ideal = true;
    h.codim = nvars + 1;
    h.dimension = -1;
    return h;
  }
  Series q = std::move(numerator);
  auto at_one = [](const Series& s) {
    std::int64_t v = 0;
    for (auto c : s) v += c;
    return v;
  };
  while (at_one(q) == 0) {
    // q = (1 - t) * next, next_k = q_0 + ... + q_k.
    Series next(q.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      run += q[k];
      next[k] = run;
    }
    q = std::move(next);
    trim(q);
    ++h.codim;
  }
  h.dimension = nvars - h.codim;
  h.degree = at_one(q);
  return h;
}

HilbertData hilbert_degree(const Ideal& I) {
  std::vector<Monomial> leads;
  leads.reserve(I.gb().size());
  for (const auto& g : I.gb()) leads.push_back(g.lm());
  return hilbert_from_numerator(hilbert_numerator(leads, I.nvars()), I.nvars());
}

}  // namespace liaison
