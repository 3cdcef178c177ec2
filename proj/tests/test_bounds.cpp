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

#include <doctest.h>

#include <limits>

#include "liaison/bounds.hpp"

using namespace liaison;

namespace {

const BranchReport* branch(const std::vector<BranchReport>& rs, const std::string& label) {
  for (const auto& r : rs) {
    if (r.label == label) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(Rational::make(6, -4) == Rational{-3, 2});
  CHECK(Rational::make(0, 5) == Rational{0, 1});
  CHECK(Rational::make(1, 3) < Rational::make(1, 2));
  CHECK(Rational::make(2, 4) <= Rational::make(1, 2));
  CHECK(Rational::make(1, 2) - Rational::make(1, 3) == Rational::make(1, 6));
  CHECK(Rational::make(20, 3).to_string() == "20/3");
  CHECK(Rational::make(9, 1).to_string() == "9");
  CHECK_THROWS(Rational::make(1, 0));
}

TEST_CASE("checked arithmetic") {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(checked_mul(big, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == 2432902008176640000LL);
  CHECK_THROWS_AS(factorial(21), std::overflow_error);
}

TEST_CASE("verdict of the degree-18 link") {
  ShiftProfile p;
  p.p = 3;
  p.m = {2, 3, 9};
  p.M = {6, 8, 9};
  p.degree = 18;
  const auto v = conjecture_verdict(p);
  CHECK(v.prod_m == 54);
  CHECK(v.prod_M == 432);
  CHECK(v.scaled_degree == 108);
  CHECK(v.lower_value == Rational::make(9, 1));
  CHECK(v.upper_value == Rational::make(72, 1));
  CHECK(v.lower_slack == Rational::make(9, 1));
  CHECK(v.upper_slack == Rational::make(54, 1));
  CHECK(v.holds());
  p.degree = 8;
  CHECK_FALSE(conjecture_verdict(p).holds());
  p.m.pop_back();
  CHECK_THROWS(conjecture_verdict(p));
}

TEST_CASE("verdicts from diagrams") {
  BettiDiagram d;
  d.add(0, 0);
  d.add(1, 2, 2);
  d.add(2, 3);
  // Codimension one but length two: only the upper bound is claimed.
  const auto v = conjecture_verdict(d, 1, 1);
  CHECK_FALSE(v.lower_asserted);
  CHECK(v.upper_holds);
  CHECK(v.holds());
  CHECK_THROWS(conjecture_verdict(d, 1, 3));
}

TEST_CASE("complete intersection degree bounds") {
  const auto r = lemma_report(CIType::make({2, 2, 2}));
  CHECK(r.scaled_degree == 48);
  CHECK(r.falling == 60);
  CHECK(r.even_falling == 48);
  CHECK(r.binomial_holds);
  CHECK(r.even_holds);
  CHECK(lemma_checks(CIType::make({3, 4, 5, 6})) == std::pair{true, true});
}

TEST_CASE("branch reports") {
  const auto three = branch_checks(LinkSpec::three_points(CIType::make({2, 2, 2})));
  const auto* eq = branch(three, "three-points/upper/n=3/case1");
  REQUIRE(eq != nullptr);
  CHECK(eq->applicable);
  CHECK(eq->lhs == 30);
  CHECK(eq->rhs == 30);
  CHECK(eq->holds);
  const auto* not_here = branch(three, "three-points/upper/n=3/case4");
  REQUIRE(not_here != nullptr);
  CHECK_FALSE(not_here->applicable);

  const auto col = branch_checks(LinkSpec::collinear(CIType::make({2, 2, 3}), 3));
  const auto* c2 = branch(col, "collinear/upper/case2");
  REQUIRE(c2 != nullptr);
  CHECK(c2->applicable);
  CHECK(c2->holds);
  for (const auto& b : col) CHECK((b.holds || !b.applicable));

  const auto one = branch_checks(LinkSpec::collinear(CIType::make({2, 2, 2}), 1));
  CHECK(branch(one, "one-point/upper/equal") != nullptr);
  CHECK(branch_checks(LinkSpec::custom(CIType::make({2, 2, 2}), {1, 1, 1})).empty());
}

TEST_CASE("sweep families") {
  CHECK(parse_family("three-points") == SweepFamily::kThreePoints);
  CHECK(family_name(SweepFamily::kOnePoint) == "one-point");
  CHECK_THROWS(parse_family("four-points"));
  SweepOptions bad;
  bad.n_min = 2;
  CHECK_THROWS(sweep(bad));
}

TEST_CASE("sweeps are independent of the thread count") {
  SweepOptions o;
  o.family = SweepFamily::kCollinear;
  o.n_min = 3;
  o.n_max = 3;
  o.dmax = 4;
  o.oracle_density = 0.3;
  o.threads = 1;
  const auto serial = sweep(o);
  o.threads = 4;
  const auto parallel = sweep(o);
  CHECK(serial.tuples == parallel.tuples);
  CHECK(serial.checks == parallel.checks);
  CHECK(serial.oracle_runs == parallel.oracle_runs);
  CHECK(serial.oracle_runs > 0);
  CHECK(serial.violations.empty());
  REQUIRE(serial.witnesses.size() == parallel.witnesses.size());
  for (std::size_t i = 0; i < serial.witnesses.size(); ++i) {
    CHECK(serial.witnesses[i].check == parallel.witnesses[i].check);
    CHECK(serial.witnesses[i].d == parallel.witnesses[i].d);
    CHECK(serial.witnesses[i].t == parallel.witnesses[i].t);
  }
}

TEST_CASE("one-point sweep") {
  SweepOptions o;
  o.family = SweepFamily::kOnePoint;
  o.n_min = 3;
  o.n_max = 6;
  o.dmax = 8;
  const auto r = sweep(o);
  CHECK(r.violations.empty());
  CHECK(r.grid() == "one-point n=3..6 dmax=8");
}
