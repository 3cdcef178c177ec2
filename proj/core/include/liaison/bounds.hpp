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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "liaison/betti.hpp"
#include "liaison/linkage.hpp"

namespace liaison {

/// Exact rational with a positive denominator, kept in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  Rational operator-(const Rational& o) const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return !(o < *this); }
  std::string to_string() const;
};

/// Overflow-checked helpers; throw std::overflow_error.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t factorial(int n);

/// Both sides of prod(m)/p! <= degree <= prod(M)/p!, in integer form.
struct Verdict {
  int p = 0;
  std::int64_t degree = 0;
  std::int64_t prod_m = 0;
  std::int64_t prod_M = 0;
  std::int64_t scaled_degree = 0;  // p! * degree
  bool lower_holds = false;
  bool upper_holds = false;
  /// False for non-Cohen-Macaulay inputs, where only the upper bound is claimed.
  bool lower_asserted = true;
  Rational lower_value;
  Rational upper_value;
  Rational lower_slack;  // degree - lower_value
  Rational upper_slack;  // upper_value - degree

  bool holds() const { return upper_holds && (lower_holds || !lower_asserted); }
};

Verdict conjecture_verdict(const ShiftProfile& profile);
/// p is the codimension. When the diagram is longer than p the module is not
/// Cohen-Macaulay: the upper bound uses the first p columns and the lower
/// bound is evaluated on the same columns but not asserted.
Verdict conjecture_verdict(const BettiDiagram& minimal, std::int64_t degree, int p);

struct LemmaReport {
  std::int64_t scaled_degree = 0;  // d_X * n!
  std::int64_t falling = 0;        // (alpha-1)(alpha-2)...(alpha-n)
  std::int64_t even_falling = 0;   // alpha(alpha-2)...(alpha-2(n-1))
  bool binomial_holds = false;
  bool even_holds = false;
};
/// Degree bounds for a non-degenerate CI with n >= 3; throws otherwise.
LemmaReport lemma_report(const CIType& ci);
std::pair<bool, bool> lemma_checks(const CIType& ci);

/// One inequality of a case analysis, evaluated at a link's degrees.
struct BranchReport {
  std::string label;
  bool applicable = false;
  bool holds = false;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};
std::vector<BranchReport> branch_checks(const LinkSpec& spec);

enum class SweepFamily { kCollinear, kThreePoints, kLemmas, kOnePoint };
SweepFamily parse_family(const std::string& name);
std::string family_name(SweepFamily f);

struct SweepOptions {
  SweepFamily family = SweepFamily::kCollinear;
  int n_min = 3;
  int n_max = 3;
  int dmax = 4;
  double oracle_density = 0.0;  // fraction of tuples realized and cross-checked
  bool oracle_only = false;     // skip the arithmetic checks
  std::uint32_t prime = 32003;
  std::uint64_t seed = 1;
  int threads = 0;  // 0: LIAISON_THREADS, then hardware concurrency
};

struct Violation {
  std::vector<int> d;
  int t = 0;
  std::string scenario;
  std::string detail;
};

/// Smallest slack rhs - lhs seen for one kind of check, with where it occurred.
struct Witness {
  std::string check;
  std::vector<int> d;
  int t = 0;
  std::string scenario;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

struct SweepReport {
  SweepOptions options;
  std::uint64_t tuples = 0;
  std::uint64_t checks = 0;
  std::uint64_t oracle_runs = 0;
  std::uint64_t oracle_degenerate = 0;
  std::vector<Violation> violations;
  std::vector<Witness> witnesses;
  double seconds = 0.0;

  std::string grid() const;
};

SweepReport sweep(const SweepOptions& options);

/// Worker count from LIAISON_THREADS (0 or unset: hardware concurrency).
int default_threads();

}  // namespace liaison
