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

#include "liaison/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "liaison/random.hpp"

namespace liaison {

// ---------------------------------------------------------------- arithmetic

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 product overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 sum overflow");
  return r;
}

std::int64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
  return f;
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Rational Rational::operator-(const Rational& o) const {
  const std::int64_t g = std::gcd(den, o.den);
  const std::int64_t l = checked_mul(den / g, o.den);
  return make(checked_add(checked_mul(num, l / den), -checked_mul(o.num, l / o.den)), l);
}

bool Rational::operator<(const Rational& o) const {
  return checked_mul(num, o.den) < checked_mul(o.num, den);
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

// ---------------------------------------------------------------- verdicts

namespace {

Verdict make_verdict(std::span<const int> m, std::span<const int> M, std::int64_t degree, int p,
                     bool lower_asserted) {
  Verdict v;
  v.p = p;
  v.degree = degree;
  v.prod_m = 1;
  v.prod_M = 1;
  for (int x : m) v.prod_m = checked_mul(v.prod_m, x);
  for (int x : M) v.prod_M = checked_mul(v.prod_M, x);
  const std::int64_t f = factorial(p);
  v.scaled_degree = checked_mul(f, degree);
  v.lower_holds = v.prod_m <= v.scaled_degree;
  v.upper_holds = v.scaled_degree <= v.prod_M;
  v.lower_asserted = lower_asserted;
  v.lower_value = Rational::make(v.prod_m, f);
  v.upper_value = Rational::make(v.prod_M, f);
  const Rational deg = Rational::make(degree, 1);
  v.lower_slack = deg - v.lower_value;
  v.upper_slack = v.upper_value - deg;
  return v;
}

}  // namespace

Verdict conjecture_verdict(const ShiftProfile& profile) {
  if (profile.p < 1 || profile.m.size() != static_cast<std::size_t>(profile.p) ||
      profile.M.size() != profile.m.size()) {
    throw std::invalid_argument("shift profile has inconsistent length");
  }
  return make_verdict(profile.m, profile.M, profile.degree, profile.p, true);
}

Verdict conjecture_verdict(const BettiDiagram& minimal, std::int64_t degree, int p) {
  if (p < 1 || minimal.length() < p) throw std::invalid_argument("diagram shorter than the codimension");
  std::vector<int> m, M;
  for (int i = 1; i <= p; ++i) {
    m.push_back(minimal.min_shift(i));
    M.push_back(minimal.max_shift(i));
  }
  return make_verdict(m, M, degree, p, minimal.length() == p);
}

// ---------------------------------------------------------------- lemmas

LemmaReport lemma_report(const CIType& ci) {
  const int n = ci.n();
  if (n < 3) throw std::invalid_argument("lemma bounds need n >= 3");
  const std::int64_t a = ci.alpha();
  LemmaReport r;
  r.scaled_degree = checked_mul(ci.degree(), factorial(n));
  r.falling = 1;
  r.even_falling = 1;
  for (int i = 1; i <= n; ++i) r.falling = checked_mul(r.falling, a - i);
  for (int j = 0; j < n; ++j) r.even_falling = checked_mul(r.even_falling, a - 2 * j);
  r.binomial_holds = r.scaled_degree <= r.falling;
  r.even_holds = r.scaled_degree <= r.even_falling;
  return r;
}

std::pair<bool, bool> lemma_checks(const CIType& ci) {
  const auto r = lemma_report(ci);
  return {r.binomial_holds, r.even_holds};
}

// ---------------------------------------------------------------- families

SweepFamily parse_family(const std::string& name) {
  if (name == "collinear") return SweepFamily::kCollinear;
  if (name == "three-points") return SweepFamily::kThreePoints;
  if (name == "lemmas") return SweepFamily::kLemmas;
  if (name == "one-point") return SweepFamily::kOnePoint;
  throw std::invalid_argument("unknown sweep family '" + name + "'");
}

std::string family_name(SweepFamily f) {
  switch (f) {
    case SweepFamily::kCollinear: return "collinear";
    case SweepFamily::kThreePoints: return "three-points";
    case SweepFamily::kLemmas: return "lemmas";
    case SweepFamily::kOnePoint: return "one-point";
  }
  return "?";
}

int default_threads() {
  if (const char* env = std::getenv("LIAISON_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string SweepReport::grid() const {
  return family_name(options.family) + " n=" + std::to_string(options.n_min) + ".." +
         std::to_string(options.n_max) + " dmax=" + std::to_string(options.dmax);
}

// ---------------------------------------------------------------- sweep

namespace {

struct Task {
  std::vector<int> d;
  int t = 0;
};

// Per-worker accumulator. Witnesses keep the smallest slack; ties go to the
// earliest task so the outcome does not depend on scheduling.
struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t oracle_runs = 0;
  std::uint64_t degenerate = 0;
  std::vector<Violation> violations;
  std::map<std::string, std::pair<Witness, std::size_t>> best;
  std::size_t task = 0;

  void offer(Witness w, std::size_t index) {
    auto it = best.find(w.check);
    if (it == best.end()) {
      std::string key = w.check;
      best.emplace(std::move(key), std::pair{std::move(w), index});
      return;
    }
    const auto& [cur, at] = it->second;
    const std::int64_t slack = w.rhs - w.lhs, cur_slack = cur.rhs - cur.lhs;
    if (slack < cur_slack || (slack == cur_slack && index < at)) it->second = {std::move(w), index};
  }
};

void ascending_tuples(int n, int lo, int dmax, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v <= dmax; ++v) {
    cur.push_back(v);
    ascending_tuples(n, v, dmax, cur, out);
    cur.pop_back();
  }
}

std::vector<Task> build_tasks(const SweepOptions& o) {
  std::vector<Task> tasks;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    ascending_tuples(n, 2, o.dmax, cur, tuples);
    for (auto& d : tuples) {
      switch (o.family) {
        case SweepFamily::kCollinear:
          for (int t = 1; t <= d.back(); ++t) tasks.push_back({d, t});
          break;
        case SweepFamily::kOnePoint:
          tasks.push_back({d, 1});
          break;
        case SweepFamily::kThreePoints:
        case SweepFamily::kLemmas:
          tasks.push_back({d, 0});
          break;
      }
    }
  }
  return tasks;
}

bool sampled(const SweepOptions& o, const Task& task) {
  if (o.oracle_density <= 0.0) return false;
  if (o.oracle_density >= 1.0) return true;
  std::uint64_t h = CounterRng::mix(o.seed);
  for (int x : task.d) h = CounterRng::mix(h ^ static_cast<std::uint64_t>(x));
  h = CounterRng::mix(h ^ (static_cast<std::uint64_t>(task.t) << 32));
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
  return u < o.oracle_density;
}

void note(Tally& r, const Task& task, std::string check, const std::string& scenario,
          std::int64_t lhs, std::int64_t rhs) {
  ++r.checks;
  if (lhs > rhs) {
    r.violations.push_back({task.d, task.t, scenario,
                            check + ": " + std::to_string(lhs) + " > " + std::to_string(rhs)});
  }
  r.offer({std::move(check), task.d, task.t, scenario, lhs, rhs}, r.task);
}

void check_profiles(Tally& r, const Task& task, const std::vector<ShiftProfile>& profiles) {
  for (const auto& prof : profiles) {
    const Verdict v = conjecture_verdict(prof);
    note(r, task, "bound/lower/" + prof.scenario, prof.scenario, v.prod_m, v.scaled_degree);
    note(r, task, "bound/upper/" + prof.scenario, prof.scenario, v.scaled_degree, v.prod_M);
  }
}

void check_branches(Tally& r, const Task& task, const LinkSpec& spec) {
  for (const auto& b : branch_checks(spec)) {
    if (!b.applicable) continue;
    note(r, task, "branch/" + b.label, b.label, b.lhs, b.rhs);
  }
}

void run_task(const SweepOptions& o, const Task& task, Tally& r) {
  const CIType ci = CIType::make(task.d);
  if (o.family == SweepFamily::kLemmas) {
    if (o.oracle_only) return;
    const auto rep = lemma_report(ci);
    note(r, task, "lemma/binomial", "", rep.scaled_degree, rep.falling);
    note(r, task, "lemma/even", "", rep.scaled_degree, rep.even_falling);
    return;
  }
  const LinkSpec spec = o.family == SweepFamily::kThreePoints ? LinkSpec::three_points(ci)
                                                              : LinkSpec::collinear(ci, task.t);
  if (!o.oracle_only) {
    if (o.family == SweepFamily::kThreePoints) {
      check_profiles(r, task, threepoints_profile(ci).profiles);
    } else {
      check_profiles(r, task, collinear_profile(ci, task.t));
    }
    check_branches(r, task, spec);
  }
  if (sampled(o, task)) {
    ++r.oracle_runs;
    try {
      const auto inst = realize(spec, o.prime, o.seed);
      const auto res = oracle_check(inst);
      ++r.checks;
      if (!res.ok) {
        std::string detail = "oracle:";
        for (const auto& m : res.mismatches) detail += " " + m + ";";
        r.violations.push_back({task.d, task.t, res.matched_scenario, detail});
      }
    } catch (const DegenerateRealization&) {
      ++r.degenerate;
    }
  }
}

bool violation_less(const Violation& a, const Violation& b) {
  return std::tie(a.d, a.t, a.scenario, a.detail) < std::tie(b.d, b.t, b.scenario, b.detail);
}

}  // namespace

SweepReport sweep(const SweepOptions& options) {
  if (options.n_min < 3 || options.n_max < options.n_min) throw std::invalid_argument("bad n range");
  if (options.dmax < 2) throw std::invalid_argument("dmax must be at least 2");
  const auto start = std::chrono::steady_clock::now();

  const std::vector<Task> tasks = build_tasks(options);
  const int threads = std::max(1, std::min<int>(options.threads > 0 ? options.threads : default_threads(),
                                                static_cast<int>(tasks.size())));
  std::vector<Tally> tallies(static_cast<std::size_t>(threads));
  std::atomic<std::size_t> next{0};
  auto worker = [&](Tally& tally) {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      tally.task = i;
      run_task(options, tasks[i], tally);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker, std::ref(tallies[static_cast<std::size_t>(i)]));
  worker(tallies[0]);
  for (auto& th : pool) th.join();

  SweepReport rep;
  rep.options = options;
  Tally total;
  for (auto& t : tallies) {
    total.checks += t.checks;
    total.oracle_runs += t.oracle_runs;
    total.degenerate += t.degenerate;
    for (auto& v : t.violations) total.violations.push_back(std::move(v));
    for (auto& [_, entry] : t.best) total.offer(std::move(entry.first), entry.second);
  }
  rep.checks = total.checks;
  rep.oracle_runs = total.oracle_runs;
  rep.oracle_degenerate = total.degenerate;
  rep.violations = std::move(total.violations);
  for (auto& [_, entry] : total.best) rep.witnesses.push_back(std::move(entry.first));

  std::set<std::vector<int>> seen;
  for (const auto& t : tasks) seen.insert(t.d);
  rep.tuples = seen.size();
  std::sort(rep.violations.begin(), rep.violations.end(), violation_less);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace liaison
