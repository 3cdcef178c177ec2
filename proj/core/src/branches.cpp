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

// Case-by-case inequality chains behind the degree bounds for collinear and
// three-point residuals. Each report is evaluated exactly in 64-bit integers.

#include <algorithm>

#include "liaison/bounds.hpp"

namespace liaison {

namespace {

class Chain {
 public:
  Chain(const CIType& ci) : d_(ci.d), n_(ci.n()), alpha_(ci.alpha()) {}

  // 1-based degree access.
  std::int64_t d(int i) const { return d_[static_cast<std::size_t>(i - 1)]; }
  int n() const { return n_; }
  std::int64_t alpha() const { return alpha_; }

  // d_1 + ... + d_i
  std::int64_t head(int i) const {
    std::int64_t s = 0;
    for (int j = 1; j <= i; ++j) s += d(j);
    return s;
  }
  // d_i + ... + d_n
  std::int64_t tail(int i) const {
    std::int64_t s = 0;
    for (int j = i; j <= n_; ++j) s += d(j);
    return s;
  }
  std::int64_t head_product(int k) const {
    std::int64_t p = 1;
    for (int i = 1; i <= k; ++i) p = checked_mul(p, head(i));
    return p;
  }
  // alpha * (d_2 + ... + d_n) * ... * d_n
  std::int64_t ci_product() const {
    std::int64_t p = alpha_;
    for (int i = 2; i <= n_; ++i) p = checked_mul(p, tail(i));
    return p;
  }
  // (alpha - a)(alpha - a - 1)...(alpha - b)
  std::int64_t falling(int a, int b) const {
    std::int64_t p = 1;
    for (int i = a; i <= b; ++i) p = checked_mul(p, alpha_ - i);
    return p;
  }
  std::int64_t degree() const {
    std::int64_t p = 1;
    for (int i = 1; i <= n_; ++i) p = checked_mul(p, d(i));
    return p;
  }

  void add(std::string label, bool applicable, std::int64_t lhs, std::int64_t rhs) {
    out.push_back({std::move(label), applicable, lhs <= rhs, lhs, rhs});
  }

  std::vector<BranchReport> out;

 private:
  std::vector<int> d_;
  int n_;
  std::int64_t alpha_;
};

std::int64_t mul(std::initializer_list<std::int64_t> xs) {
  std::int64_t p = 1;
  for (auto x : xs) p = checked_mul(p, x);
  return p;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t p = 1;
  for (int i = 0; i < e; ++i) p = checked_mul(p, b);
  return p;
}

void collinear_upper(Chain& c, std::int64_t t) {
  const int n = c.n();
  const auto a = c.alpha();
  const auto dn = c.d(n);
  const auto fact = factorial(n);
  const auto lhs = checked_mul(fact, c.degree() - t);
  const auto front = c.falling(1, n - 1);

  c.add("collinear/upper/ci-chain", true, lhs, c.ci_product());
  const auto m1 = std::max(dn, a - t - n + 1);
  c.add("collinear/upper/case1", true, lhs, checked_mul(front, m1));
  if (n >= 4) {
    c.add("collinear/upper/case1/ci-product", true, c.ci_product(), checked_mul(front, m1));
    c.add("collinear/upper/case1/alpha-pair", true, mul({a, a - c.d(1) - c.d(2)}), mul({a - 1, a - 3}));
  } else {
    const auto d1 = c.d(1), d2 = c.d(2), d3 = c.d(3);
    c.add("collinear/upper/case1/n=3/d1>=3", d1 >= 3, mul({a, a - d1}), mul({a - 1, a - 2}));
    const bool b2 = d1 == 2 && d2 >= 3;
    c.add("collinear/upper/case1/n=3/d1=2,d2>=3", b2, 6 * c.degree(), mul({a - 1, a - 2, d3}));
    c.add("collinear/upper/case1/n=3/d1=2,d2>=3/expanded", b2, 11 * d2,
          d2 * d2 + 2 * d2 * d3 + d3 * d3 + d3);
    const bool b3 = d1 == 2 && d2 == 2 && d3 >= 3;
    c.add("collinear/upper/case1/n=3/d1=d2=2", b3, 24 * d3, d3 * d3 * d3 + 5 * d3 * d3 + 6 * d3);
    c.add("collinear/upper/case1/n=3/d1=d2=2/margin", b3, 18, d3 * d3 + 5 * d3);
    c.add("collinear/upper/case1/n=3/all-2", d1 == 2 && d3 == 2 && t > 1, 6 * (8 - t), 40);
  }

  const bool case2 = a - t - n + 1 == dn - 1 && c.d(1) < dn;
  c.add("collinear/upper/case2", case2, lhs, checked_mul(a - t - n + 1, front));
  c.add("collinear/upper/case2/ci-lemma", case2, checked_mul(c.degree(), fact),
        checked_mul(a - 1, c.ci_product() / a));
  if (n >= 5) {
    c.add("collinear/upper/case2/n>=5", case2, mul({dn, dn + c.d(n - 1)}), mul({dn - 1, dn + t}));
  } else if (n == 4) {
    const auto d1 = c.d(1), d2 = c.d(2), d3 = c.d(3), d4 = c.d(4);
    const bool eq = d4 == d3 || d2 == d4;
    c.add("collinear/upper/case2/n=4/d3=d4", case2 && eq, 12 * d1 * d2, mul({a - 2, a - 3}));
    c.add("collinear/upper/case2/n=4/d3=d4/tail", case2 && eq, 2 * d3 * d4, mul({a - 1, d4 - 1}));
    const bool lt = d3 < d4;
    c.add("collinear/upper/case2/n=4/d3<d4/first", case2 && lt, 4 * d1, a - 1);
    c.add("collinear/upper/case2/n=4/d3<d4/second", case2 && lt, 3 * d2, a - 3);
    c.add("collinear/upper/case2/n=4/d3<d4/tail", case2 && lt, 2 * d3 * d4, mul({a - 2, d4 - 1}));
  } else {
    const auto d1 = c.d(1), d2 = c.d(2), d3 = c.d(3);
    const bool small = 3 * d1 <= a - 2;
    c.add("collinear/upper/case2/n=3/3d1<=alpha-2", case2 && small, 2 * d2 * d3, mul({a - 1, d3 - 1}));
    // The remaining shape is d1 = d2 = d3 - 1; checked in expanded form.
    const bool eq = case2 && !small;
    c.add("collinear/upper/case2/n=3/d1=d2=d3-1", eq, 6 * (d1 * d1 * (d1 + 1) - (2 * d1 - 1)),
          mul({d1, 3 * d1 - 1, 3 * d1}));
    c.add("collinear/upper/case2/n=3/d1=d2=d3-1/expanded", eq, 0,
          3 * (d1 - 1) * (d1 * d1 - 2 * d1 + 2));
  }
}

void collinear_lower(Chain& c, std::int64_t t) {
  const int n = c.n();
  const auto a = c.alpha();
  const auto dn = c.d(n);
  const auto fact = factorial(n);
  const auto P = c.head_product(n - 1);

  c.add("collinear/lower/no-cancel", true, checked_mul(P, a - t), checked_mul(fact, c.degree() - t));
  c.add("collinear/lower/no-cancel/ci", true, checked_mul(P, a), checked_mul(fact, c.degree()));
  c.add("collinear/lower/no-cancel/factorial", true, fact, P);

  bool equal_lower = false;
  for (int l = 1; l < n; ++l) equal_lower = equal_lower || c.d(l) == t;
  const bool case1 = equal_lower && t < dn;
  const auto d1 = c.d(1), d2 = c.d(2), d3 = c.d(3);
  const bool small = (n == 3 && d1 == 2) || (n == 4 && d1 == 2 && (d2 == 2 || d2 == 3)) ||
                     (n == 5 && d1 == 2 && d2 == 2 && (d3 == 2 || d3 == 3));
  c.add("collinear/lower/case1", case1, checked_mul(P, a - 1), checked_mul(fact, c.degree() - t));
  c.add("collinear/lower/case1/reduction", case1 && !small, checked_mul(fact, t), checked_mul(2, P));
  c.add("collinear/lower/case1/alpha", case1, a + 1, n * dn);

  const bool case2 = t == dn;
  const auto Q = c.head_product(n - 2);
  std::int64_t dprime = 1;
  for (int i = 1; i < n; ++i) dprime = checked_mul(dprime, c.d(i));
  c.add("collinear/lower/case2", case2, mul({a - 1, a - dn - 1, Q}), checked_mul(fact, c.degree() - dn));
  c.add("collinear/lower/case2/ci", case2, checked_mul(a - dn, Q), checked_mul(factorial(n - 1), dprime));
  c.add("collinear/lower/case2/factorial", case2, factorial(n - 1), Q);
  c.add("collinear/lower/case2/alpha", case2, a, n * dn);
}

void one_point(Chain& c) {
  const int n = c.n();
  const auto a = c.alpha();
  const auto fact = factorial(n);
  const auto scaled = checked_mul(fact, c.degree() - 1);
  c.add("one-point/lower", true, checked_mul(c.head_product(n - 1), a - 1), scaled);
  c.add("one-point/upper", true, scaled, c.falling(1, n));
  if (c.d(1) < c.d(n)) {
    for (int k = 1; k <= n; ++k) {
      c.add("one-point/upper/row-" + std::to_string(k), true, (n - k + 1) * c.d(k), a - k);
    }
  } else {
    const auto delta = c.d(1);
    c.add("one-point/upper/equal", true, checked_mul(fact, ipow(delta, n)),
          mul({a, c.falling(2, n - 1), a - 2 * n + 2}));
    c.add("one-point/upper/equal/final", true, mul({a, a - 2 * n + 2}), mul({a - 1, a - n}));
  }
}

void three_points(Chain& c) {
  const int n = c.n();
  const auto a = c.alpha();
  const auto fact = factorial(n);
  const auto dx = c.degree();
  const auto d1 = c.d(1), d2 = c.d(2), d3 = c.d(3);
  const auto P = c.head_product(n - 1);
  const bool first_three_two = d1 == 2 && d2 == 2 && d3 == 2;

  if (n >= 4) {
    const auto target = mul({a - n, a - n - 1, c.falling(1, n - 2)});
    std::int64_t even = 1;
    for (int j = 0; j < n; ++j) even = checked_mul(even, a - 2 * j);
    c.add("three-points/upper", true, checked_mul(fact, dx - 3), target);
    c.add("three-points/upper/ci", true, checked_mul(fact, dx), c.ci_product());
    c.add("three-points/upper/even-step", true, c.ci_product(), even);
    c.add("three-points/upper/even-vs-target", true, even, target);
    if (n > 4) c.add("three-points/upper/alpha-pair", true, mul({a, a - 4}), mul({a - 1, a - 3}));
    if (n == 4) c.add("three-points/upper/n=4/alpha-pair", true, mul({a, a - 6}), mul({a - 1, a - 5}));
  } else {
    c.add("three-points/upper/n=3/case1", first_three_two, 6 * (dx - 3), mul({a - 4, a - 3, a - 1}));
    const bool b2 = d1 == 2 && d2 == 2 && d3 > 2;
    c.add("three-points/upper/n=3/case2", b2, 6 * (4 * d3 - 3), mul({d3, d3 + 1, d3 + 3}));
    c.add("three-points/upper/n=3/case2/expanded", b2, 0, mul({d3 - 2, d3 * d3 + 6 * d3 - 9}));
    const bool b3 = d1 == 2 && d2 > 2;
    const auto s = d2 + d3;
    c.add("three-points/upper/n=3/case3", b3, 6 * (2 * d2 * d3 - 3), mul({s - 2, s - 1, s + 1}));
    const bool b4 = d1 > 2;
    c.add("three-points/upper/n=3/case4", b4, mul({a, a - d1, a - d1 - d2}), mul({a - 1, a - d1, a - 4}));
    c.add("three-points/upper/n=3/case4/ci", b4, 6 * dx, mul({a, a - d1, a - d1 - d2}));
  }

  // Last minimal shift alpha - 2.
  if (n >= 4) {
    c.add("three-points/lower/n>=4", true, checked_mul(a - 2, P), checked_mul(fact, dx - 3));
    const auto doubled = checked_mul(ipow(2, n), factorial(n - 1));
    c.add("three-points/lower/n>=4/factorial", true, 3 * fact, doubled);
    c.add("three-points/lower/n>=4/doubling", true, doubled, checked_mul(2, P));
  } else {
    c.add("three-points/lower/n=3/all-2", first_three_two, mul({2, 3, a - 2}), 6 * (dx - 3));
    c.add("three-points/lower/n=3/d1=d2=2", d1 == 2 && d2 == 2 && d3 > 2, mul({2, 4, a - 2}), 6 * (dx - 3));
    c.add("three-points/lower/n=3/d2>2", d2 > 2, mul({d1, d1 + d2, a - 2}), 6 * dx - 18);
    c.add("three-points/lower/n=3/d2>2/margin", d2 > 2, 18, 2 * d1 * (d1 + d2));
  }

  // Last minimal shift alpha - 1, which needs d1 = d2 = d3 = 2.
  if (n >= 5) {
    c.add("three-points/lower/alpha-1/n>=5", first_three_two, 3 * fact, P);
  } else if (n == 4) {
    const auto d4 = c.d(4);
    // With d4 = 2 the third minimal shift drops to 5, so this display needs d4 >= 3.
    c.add("three-points/lower/alpha-1/n=4", first_three_two && d4 >= 3, mul({2, 4, 6, d4 + 5}),
          24 * (8 * d4 - 3));
  } else {
    c.add("three-points/lower/alpha-1/n=3", first_three_two, mul({2, 3, a - 1}), 6 * (dx - 3));
  }
}

}  // namespace

std::vector<BranchReport> branch_checks(const LinkSpec& spec) {
  Chain c(spec.ci);
  if (spec.ci.n() < 3) return {};
  switch (spec.kind) {
    case ResidualKind::kCollinear:
      collinear_upper(c, spec.t);
      collinear_lower(c, spec.t);
      if (spec.t == 1) one_point(c);
      break;
    case ResidualKind::kThreePoints:
      three_points(c);
      break;
    case ResidualKind::kCustom:
      break;
  }
  return std::move(c.out);
}

}  // namespace liaison
