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

#include "liaison/ring.hpp"

#include <algorithm>
#include <sstream>

namespace liaison {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- PrimeField

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff r = 1 % p_;
  Coeff b = a % p_;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(p_) + ")");
  return pow(a, p_ - 2);
}

Coeff PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

std::int64_t PrimeField::to_signed(Coeff a) const {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

// ----------------------------------------------------------------- FieldElem

FieldElem::FieldElem(std::int64_t value, std::uint32_t modulus)
    : value_(PrimeField(modulus).from_int(value)), modulus_(modulus) {}

void FieldElem::check(const FieldElem& o) const {
  if (modulus_ != o.modulus_) throw RingMismatch("field elements over different primes");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check(o);
  return {PrimeField(modulus_).add(value_, o.value_), modulus_};
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check(o);
  return {PrimeField(modulus_).sub(value_, o.value_), modulus_};
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check(o);
  return {PrimeField(modulus_).mul(value_, o.value_), modulus_};
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::operator-() const { return {PrimeField(modulus_).neg(value_), modulus_}; }

FieldElem FieldElem::inverse() const { return {PrimeField(modulus_).inv(value_), modulus_}; }

// ------------------------------------------------------------------ Monomial

Monomial::Monomial(int nvars) {
  if (nvars < 0 || nvars > kMaxVars) {
    throw std::invalid_argument("variable count " + std::to_string(nvars) + " out of range");
  }
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<int> exps) : Monomial(static_cast<int>(exps.size())) {
  int i = 0;
  for (int e : exps) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  Monomial m(static_cast<int>(exps.size()));
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
  return m;
}

Monomial Monomial::variable(int nvars, int index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(int i, int e) {
  if (i < 0 || i >= nvars_) throw std::out_of_range("variable index out of range");
  if (e < 0 || e > 0xFFFF) throw std::out_of_range("exponent out of range");
  auto& slot = exp_[static_cast<std::size_t>(i)];
  degree_ = degree_ - slot + static_cast<std::uint32_t>(e);
  slot = static_cast<Exponent>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (int i = 0; i < nvars_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 0; i < nvars_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (int i = 0; i < nvars_; ++i) r.exp_[i] = static_cast<Exponent>(exp_[i] + o.exp_[i]);
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& d) const {
  Monomial r = *this;
  for (int i = 0; i < nvars_; ++i) r.exp_[i] = static_cast<Exponent>(exp_[i] - d.exp_[i]);
  r.degree_ = degree_ - d.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    r.exp_[i] = std::max(exp_[i], o.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    r.exp_[i] = std::min(exp_[i], o.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull ^ nvars_;
  for (int i = 0; i < nvars_; ++i) {
    h ^= exp_[i];
    h *= 1099511628211ull;
  }
  return h;
}

namespace detail {

namespace {

// Compares exponents [lo, hi): degree first, then the last differing exponent,
// smaller exponent wins. Returns >0 if a > b.
int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0;
  int db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  const int n = a.nvars();
  if (ord.kind == OrderKind::kGrevlex) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (int i = n - 1; i >= 0; --i) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  const int k = std::min(ord.block, n);
  if (int c = grevlex_range(a, b, 0, k); c != 0) return c;
  return grevlex_range(a, b, k, n);
}

}  // namespace

bool monomial_greater(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  return compare(a, b, ord) > 0;
}

}  // namespace detail

std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  if (a.nvars() != b.nvars()) {
    throw RingMismatch("monomials with " + std::to_string(a.nvars()) + " and " +
                       std::to_string(b.nvars()) + " variables");
  }
  if (ord.kind == OrderKind::kEliminationBlock && (ord.block < 0 || ord.block > a.nvars())) {
    throw RingMismatch("elimination block larger than the variable count");
  }
  if (a == b) return std::strong_ordering::equal;
  return detail::monomial_greater(a, b, ord) ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
}

// ---------------------------------------------------------------------- Ring

Ring::Ring(std::uint32_t prime, int nv, MonomialOrder ord) : field(prime), nvars(nv), order(ord) {
  if (nv < 1 || nv > kMaxVars) {
    throw std::invalid_argument("variable count " + std::to_string(nv) + " out of range");
  }
  if (ord.kind == OrderKind::kEliminationBlock && (ord.block < 1 || ord.block >= nv)) {
    throw std::invalid_argument("elimination block must leave variables on both sides");
  }
}

// ---------------------------------------------------------------- Polynomial

namespace {

void require_same(const Ring& a, const Ring& b) {
  if (!(a == b)) throw RingMismatch("polynomials from different rings");
}

}  // namespace

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.mono.nvars() != ring.nvars) throw RingMismatch("term has the wrong variable count");
  }
  const auto& ord = ring.order;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return detail::monomial_greater(a.mono, b.mono, ord);
  });
  Polynomial p(ring);
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    Coeff c = t.coeff % ring.prime();
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = ring.field.add(p.terms_.back().coeff, c);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.push_back({t.mono, c});
    }
  }
  return p;
}

Polynomial Polynomial::constant(const Ring& ring, std::int64_t c) {
  Polynomial p(ring);
  Coeff v = ring.field.from_int(c);
  if (v != 0) p.terms_.push_back({Monomial(ring.nvars), v});
  return p;
}

Polynomial Polynomial::variable(const Ring& ring, int index) {
  return term(ring, Monomial::variable(ring.nvars, index), 1);
}

Polynomial Polynomial::term(const Ring& ring, const Monomial& m, Coeff c) {
  if (m.nvars() != ring.nvars) throw RingMismatch("monomial has the wrong variable count");
  Polynomial p(ring);
  c %= ring.prime();
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || lc() == 1) return *this;
  return scaled(ring_.field.inv(lc()));
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= ring_.prime();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, ring_.field.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, Coeff c) const {
  c %= ring_.prime();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, ring_.field.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::change_ring(const Ring& target, int offset) const {
  if (target.prime() != ring_.prime() || target.nvars != ring_.nvars + offset) {
    throw RingMismatch("incompatible ring change");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target.nvars);
    for (int i = 0; i < ring_.nvars; ++i) m.set(i + offset, t.mono[i]);
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::project_ring(const Ring& target, int offset) const {
  if (target.prime() != ring_.prime() || target.nvars + offset != ring_.nvars) {
    throw RingMismatch("incompatible ring projection");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target.nvars);
    for (int i = 0; i < offset; ++i) {
      if (t.mono[i] != 0) throw std::logic_error("projected polynomial involves dropped variable");
    }
    for (int i = 0; i < target.nvars; ++i) m.set(i, t.mono[i + offset]);
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::sub_mul(Coeff c, const Monomial& m, const Polynomial& g) const {
  require_same(ring_, g.ring_);
  const auto& F = ring_.field;
  const auto& ord = ring_.order;
  const Coeff nc = F.neg(c % ring_.prime());
  Polynomial r(ring_);
  if (nc == 0) return *this;
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial gm = g.terms_[j].mono * m;
    if (i == terms_.size() || detail::monomial_greater(gm, terms_[i].mono, ord)) {
      r.terms_.push_back({gm, F.mul(nc, g.terms_[j].coeff)});
      ++j;
    } else if (gm == terms_[i].mono) {
      Coeff v = F.add(terms_[i].coeff, F.mul(nc, g.terms_[j].coeff));
      if (v != 0) r.terms_.push_back({gm, v});
      ++i;
      ++j;
    } else {
      r.terms_.push_back(terms_[i++]);
    }
  }
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  return sub_mul(ring_.field.neg(1), Monomial(ring_.nvars), o);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (o.is_zero()) return *this;
  if (is_zero() && o.ring_ == ring_) return -o;
  return sub_mul(1, Monomial(ring_.nvars), o);
}

Polynomial Polynomial::operator-() const { return scaled(ring_.field.neg(1)); }

Polynomial Polynomial::operator*(const Polynomial& o) const { return poly_mul(*this, o); }

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(ring_ == o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  require_same(f.ring(), g.ring());
  const Ring& ring = f.ring();
  if (f.is_zero() || g.is_zero()) return Polynomial(ring);
  // Accumulate row by row; the smaller factor drives the outer loop.
  const Polynomial& a = f.size() <= g.size() ? f : g;
  const Polynomial& b = f.size() <= g.size() ? g : f;
  if (a.size() == 1) return b.mul_term(a.lm(), a.lc());
  std::vector<Term> all;
  all.reserve(a.size() * b.size());
  const auto& F = ring.field;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) all.push_back({s.mono * t.mono, F.mul(s.coeff, t.coeff)});
  }
  return Polynomial::from_terms(ring, std::move(all));
}

namespace {

void check_divisors(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) {
    require_same(f.ring(), g.ring());
    if (g.is_zero()) throw std::invalid_argument("zero divisor in division");
  }
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  check_divisors(f, divisors);
  const Ring& ring = f.ring();
  const auto& F = ring.field;
  std::vector<Term> rem;
  Polynomial p = f;
  // p shrinks from the front; leading terms that no divisor hits move to rem.
  while (!p.is_zero()) {
    const Term lt = p.leading();
    const Polynomial* hit = nullptr;
    for (const auto& g : divisors) {
      if (g.lm().divides(lt.mono)) {
        hit = &g;
        break;
      }
    }
    if (hit != nullptr) {
      p = p.sub_mul(F.mul(lt.coeff, F.inv(hit->lc())), lt.mono / hit->lm(), *hit);
    } else {
      rem.push_back(lt);
      p = p - Polynomial::term(ring, lt.mono, lt.coeff);
    }
  }
  Polynomial r(ring);
  r = Polynomial::from_terms(ring, std::move(rem));
  return r;
}

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  check_divisors(f, divisors);
  const Ring& ring = f.ring();
  const auto& F = ring.field;
  std::vector<std::vector<Term>> q(divisors.size());
  std::vector<Term> rem;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading();
    std::size_t k = 0;
    for (; k < divisors.size(); ++k) {
      if (divisors[k].lm().divides(lt.mono)) break;
    }
    if (k < divisors.size()) {
      const Coeff c = F.mul(lt.coeff, F.inv(divisors[k].lc()));
      const Monomial m = lt.mono / divisors[k].lm();
      q[k].push_back({m, c});
      p = p.sub_mul(c, m, divisors[k]);
    } else {
      rem.push_back(lt);
      p = p - Polynomial::term(ring, lt.mono, lt.coeff);
    }
  }
  DivisionResult out;
  out.quotients.reserve(divisors.size());
  for (auto& terms : q) out.quotients.push_back(Polynomial::from_terms(ring, std::move(terms)));
  out.remainder = Polynomial::from_terms(ring, std::move(rem));
  return out;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  const Polynomial divisors[] = {g};
  DivisionResult d = divide(f, divisors);
  if (!d.remainder.is_zero()) throw std::domain_error("divide_exact: divisor does not divide");
  return d.quotients.front();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same(f.ring(), g.ring());
  const auto& F = f.ring().field;
  const Monomial l = f.lm().lcm(g.lm());
  Polynomial a = f.mul_term(l / f.lm(), F.inv(f.lc()));
  return a.sub_mul(F.inv(g.lc()), l / g.lm(), g);
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << i;
    if (m[i] > 1) os << '^' << m[i];
  }
  return os.str();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  const auto& F = f.ring().field;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::int64_t c = F.to_signed(t.coeff);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::int64_t mag = c < 0 ? -c : c;
    if (t.mono.is_one()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << to_string(t.mono);
    }
  }
  return os.str();
}

}  // namespace liaison
