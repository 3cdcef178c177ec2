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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace liaison {

/// Maximum number of ring variables (one of them may be an elimination variable).
inline constexpr int kMaxVars = 16;

inline constexpr std::uint32_t kDefaultPrime = 32003;

using Coeff = std::uint32_t;
using Exponent = std::uint16_t;

/// Raised when two values from different rings (or of mismatched shape) meet.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

/// Arithmetic in GF(p) on raw residues. p must be a prime below 2^31.
class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  Coeff inv(Coeff a) const;
  /// Reduces an arbitrary signed integer into [0, p).
  Coeff from_int(std::int64_t v) const;
  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Coeff a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_ = kDefaultPrime;
};

/// A residue together with its modulus; the value-level view of a coefficient.
class FieldElem {
 public:
  FieldElem(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;

  bool operator==(const FieldElem&) const = default;

 private:
  void check(const FieldElem& o) const;

  std::uint32_t value_;
  std::uint32_t modulus_;
};

enum class OrderKind { kGrevlex, kEliminationBlock };

/// Graded reverse lexicographic order, or a block order that compares the
/// first `block` variables grevlex-style before the remaining ones.
struct MonomialOrder {
  OrderKind kind = OrderKind::kGrevlex;
  int block = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder elimination(int k) { return {OrderKind::kEliminationBlock, k}; }

  bool operator==(const MonomialOrder&) const = default;
};

/// Dense exponent vector with a cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(std::initializer_list<int> exps);
  static Monomial from_exponents(std::span<const int> exps);
  static Monomial variable(int nvars, int index, int power = 1);

  int nvars() const { return nvars_; }
  int degree() const { return static_cast<int>(degree_); }
  int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
  void set(int i, int e);

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; requires `d` to divide *this.
  Monomial operator/(const Monomial& d) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;

  bool operator==(const Monomial& o) const {
    return nvars_ == o.nvars_ && degree_ == o.degree_ && exp_ == o.exp_;
  }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exp_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

/// Checked comparison; throws RingMismatch on differing variable counts.
std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b,
                                  const MonomialOrder& ord);

namespace detail {
/// Unchecked hot-path comparison: true iff a > b.
bool monomial_greater(const Monomial& a, const Monomial& b, const MonomialOrder& ord);
}  // namespace detail

/// Coefficient field, variable count and monomial order.
struct Ring {
  PrimeField field;
  int nvars = 0;
  MonomialOrder order;

  Ring() = default;
  Ring(std::uint32_t prime, int nvars, MonomialOrder order = MonomialOrder::grevlex());

  std::uint32_t prime() const { return field.modulus(); }
  bool operator==(const Ring&) const = default;
};

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Polynomial over GF(p). Terms are kept strictly descending under the ring's
/// order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Ring& ring) : ring_(ring) {}

  /// Sorts, merges duplicates and drops zero coefficients.
  static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);
  static Polynomial constant(const Ring& ring, std::int64_t c);
  static Polynomial variable(const Ring& ring, int index);
  static Polynomial term(const Ring& ring, const Monomial& m, Coeff c = 1);

  const Ring& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
  /// Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_.front().mono.is_one(); }

  const Term& leading() const;
  const Monomial& lm() const { return leading().mono; }
  Coeff lc() const { return leading().coeff; }

  /// Largest total degree among the terms; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  Polynomial monic() const;
  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(const Monomial& m, Coeff c) const;
  /// Same terms re-sorted under a different ring with the same prime/nvars
  /// (or embedded by shifting variables right by `offset`).
  Polynomial change_ring(const Ring& target, int offset = 0) const;
  /// Drops the first `offset` variables; they must have exponent zero.
  Polynomial project_ring(const Ring& target, int offset) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  /// self - c * m * g, fused.
  Polynomial sub_mul(Coeff c, const Monomial& m, const Polynomial& g) const;

  bool operator==(const Polynomial& o) const;

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

/// Multivariate division remainder: no term of the result is divisible by a
/// leading monomial of `divisors`. Divisors are tried in list order.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Division with cofactors: f = sum q_i g_i + r.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors);

/// Exact quotient f / g; throws std::domain_error when g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& f);

}  // namespace liaison

template <>
struct std::hash<liaison::Monomial> {
  std::size_t operator()(const liaison::Monomial& m) const noexcept { return m.hash(); }
};
