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

#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "liaison/bounds.hpp"
#include "liaison/groebner.hpp"
#include "liaison/io.hpp"
#include "liaison/linkage.hpp"
#include "liaison/resolution.hpp"

namespace liaison::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integers past 2^53 are not exact in every JSON consumer.
json exact(std::int64_t v) {
  constexpr std::int64_t kSafe = std::int64_t{1} << 53;
  if (v > kSafe || v < -kSafe) return std::to_string(v);
  return v;
}

json exact_list(const std::vector<std::int64_t>& vs) {
  json a = json::array();
  for (auto v : vs) a.push_back(exact(v));
  return a;
}

json diagram_json(const BettiDiagram& d) {
  json entries = json::array();
  for (const auto& [key, rank] : d.entries()) entries.push_back({key.first, key.second, rank});
  return {{"totals", d.totals()}, {"entries", entries}, {"table", render_betti(d)}};
}

json polys_json(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_string(p));
  return a;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::vector<int> parse_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + ": expected a comma-separated list of integers");
    }
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--n: expected A..B");
  }
}

IdealFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ideal_file(buf.str());
}

struct Outcome {
  int code = kClean;
  std::string text;
  json result;
};

// ---------------------------------------------------------------- ideal commands

Outcome cmd_gb(const std::string& path) {
  const auto file = load(path);
  const Ideal I(file.ring, file.generators);
  Outcome o;
  for (const auto& g : I.gb()) o.text += to_string(g) + "\n";
  o.result = {{"gb", polys_json(I.gb())}};
  return o;
}

Outcome cmd_res(const std::string& path, bool nonminimal) {
  const auto file = load(path);
  Resolution res = free_resolution(Ideal(file.ring, file.generators));
  if (!nonminimal) res = minimalize(std::move(res));
  const BettiDiagram d = betti(res);
  Outcome o;
  o.text = render_betti(d);
  std::vector<int> ranks;
  for (int k = 0; k <= res.length(); ++k) ranks.push_back(res.rank(k));
  o.text += "ranks " + join(ranks, " ") + "\n";
  o.text += std::string("minimal ") + (res.minimal ? "yes" : "no") + "\n";
  o.result = {{"diagram", diagram_json(d)}, {"ranks", ranks}, {"minimal", res.minimal}};
  return o;
}

Outcome cmd_betti(const std::string& path) {
  const auto file = load(path);
  const BettiDiagram d = betti(minimalize(free_resolution(Ideal(file.ring, file.generators))));
  Outcome o;
  o.text = render_betti(d);
  o.result = {{"diagram", diagram_json(d)}};
  return o;
}

Outcome cmd_degree(const std::string& path) {
  const auto file = load(path);
  const HilbertData h = hilbert_degree(Ideal(file.ring, file.generators));
  Outcome o;
  o.text = "degree " + std::to_string(h.degree) + "\ncodim " + std::to_string(h.codim) + "\ndimension " +
           std::to_string(h.dimension) + "\n";
  if (h.unit_ideal) o.text += "warning: unit ideal, degree reported as 0\n";
  o.result = {{"degree", exact(h.degree)},
              {"codim", h.codim},
              {"dimension", h.dimension},
              {"numerator", exact_list(h.numerator)},
              {"unit_ideal", h.unit_ideal}};
  return o;
}

// ---------------------------------------------------------------- link

json profile_json(const ShiftProfile& p) {
  return {{"scenario", p.scenario}, {"m", p.m}, {"M", p.M}, {"degree", exact(p.degree)}};
}

json verdict_json(const Verdict& v) {
  return {{"p", v.p},
          {"degree", exact(v.degree)},
          {"prod_m", exact(v.prod_m)},
          {"prod_M", exact(v.prod_M)},
          {"scaled_degree", exact(v.scaled_degree)},
          {"lower_holds", v.lower_holds},
          {"upper_holds", v.upper_holds},
          {"lower_asserted", v.lower_asserted},
          {"lower_value", v.lower_value.to_string()},
          {"upper_value", v.upper_value.to_string()},
          {"holds", v.holds()}};
}

Outcome cmd_link(const LinkSpec& spec, std::uint32_t prime, std::uint64_t seed) {
  const LinkInstance inst = realize(spec, prime, seed);
  const OracleResult res = oracle_check(inst);
  const Verdict v = conjecture_verdict(res.minimal, res.degree, spec.n());

  std::vector<ShiftProfile> profiles;
  if (spec.kind == ResidualKind::kCollinear) profiles = collinear_profile(spec.ci, spec.t);
  if (spec.kind == ResidualKind::kThreePoints) profiles = threepoints_profile(spec.ci).profiles;

  std::ostringstream os;
  os << "link " << spec.label() << " prime " << prime << " seed " << seed << "\n";
  os << "I_X:";
  for (const auto& g : inst.IX.generators()) os << " " << to_string(g) << ";";
  os << "\nI_Z:";
  for (const auto& g : inst.IZ.gb()) os << " " << to_string(g) << ";";
  os << "\nI_Y:";
  for (const auto& g : inst.IY.gb()) os << " " << to_string(g) << ";";
  os << "\ndegree " << res.degree << "\n";
  os << "\nnonminimal (mapping cone)\n" << render_betti(res.cone);
  os << "\nminimal\n" << render_betti(res.minimal);
  os << "\nobserved m=" << join(res.observed.m) << " M=" << join(res.observed.M) << "\n";
  for (const auto& p : profiles) {
    os << (p.same_shifts(res.observed) ? "* " : "  ") << p.scenario << " m=" << join(p.m)
       << " M=" << join(p.M) << "\n";
  }
  if (!res.matched_scenario.empty()) os << "matched " << res.matched_scenario << "\n";
  os << "verdict " << v.lower_value.to_string() << " <= " << v.degree << " <= " << v.upper_value.to_string()
     << (v.holds() ? " holds" : " FAILS") << "\n";
  for (const auto& m : res.mismatches) os << "mismatch: " << m << "\n";

  Outcome o;
  o.text = os.str();
  json prof = json::array();
  for (const auto& p : profiles) prof.push_back(profile_json(p));
  o.result = {{"spec", spec.label()},
              {"prime", prime},
              {"seed", std::to_string(seed)},
              {"seed_trail", [&] {
                 json a = json::array();
                 for (auto s : inst.seed_trail) a.push_back(std::to_string(s));
                 return a;
               }()},
              {"I_X", polys_json(inst.IX.generators())},
              {"I_Z", polys_json(inst.IZ.gb())},
              {"I_Y", polys_json(inst.IY.gb())},
              {"degree", exact(res.degree)},
              {"nonminimal", diagram_json(res.cone)},
              {"predicted", diagram_json(res.predicted)},
              {"minimal", diagram_json(res.minimal)},
              {"observed", profile_json(res.observed)},
              {"profiles", prof},
              {"matched_scenario", res.matched_scenario},
              {"verdict", verdict_json(v)},
              {"mismatches", res.mismatches}};
  o.code = res.ok && v.holds() ? kClean : kViolations;
  return o;
}

// ---------------------------------------------------------------- sweeps

Outcome report_sweep(const SweepReport& r) {
  std::ostringstream os;
  os << "grid " << r.grid() << "\n";
  os << "tuples " << r.tuples << "\n";
  os << "checks " << r.checks << "\n";
  os << "oracle runs " << r.oracle_runs << " (degenerate " << r.oracle_degenerate << ")\n";
  os << "violations " << r.violations.size() << "\n";
  for (const auto& v : r.violations) {
    os << "  d=" << join(v.d) << " t=" << v.t << " " << v.scenario << " " << v.detail << "\n";
  }
  os << "min slack witnesses\n";
  for (const auto& w : r.witnesses) {
    os << "  " << w.check << " d=" << join(w.d) << " t=" << w.t << " " << w.lhs << " <= " << w.rhs << "\n";
  }
  os << "wall time " << std::round(r.seconds * 1000.0) / 1000.0 << " s\n";

  Outcome o;
  o.text = os.str();
  json viol = json::array();
  for (const auto& v : r.violations) {
    viol.push_back({{"d", v.d}, {"t", v.t}, {"scenario", v.scenario}, {"detail", v.detail}});
  }
  json wit = json::array();
  for (const auto& w : r.witnesses) {
    wit.push_back({{"check", w.check},
                   {"d", w.d},
                   {"t", w.t},
                   {"scenario", w.scenario},
                   {"lhs", exact(w.lhs)},
                   {"rhs", exact(w.rhs)}});
  }
  o.result = {{"grid", r.grid()},
              {"tuples", r.tuples},
              {"checks", r.checks},
              {"oracle_runs", r.oracle_runs},
              {"oracle_degenerate", r.oracle_degenerate},
              {"violations", viol},
              {"witnesses", wit},
              {"seconds", r.seconds}};
  if (!r.violations.empty()) {
    o.code = kViolations;
  } else if (r.oracle_degenerate > 0) {
    o.code = kDegenerate;
  }
  return o;
}

struct SweepFlags {
  std::string family;
  std::string n = "3..3";
  int dmax = 4;
  double density = 0.0;
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  int threads = 0;

  SweepOptions options(bool oracle_only) const {
    SweepOptions o;
    o.family = parse_family(family);
    std::tie(o.n_min, o.n_max) = parse_range(n);
    if (o.n_min < 3 || o.n_max < o.n_min) throw UsageError("--n: need 3 <= A <= B");
    if (dmax < 2) throw UsageError("--dmax must be at least 2");
    if (density < 0.0 || density > 1.0) throw UsageError("--oracle-density must lie in [0, 1]");
    o.dmax = dmax;
    o.oracle_density = density;
    o.oracle_only = oracle_only;
    o.prime = prime;
    o.seed = seed;
    o.threads = threads;
    return o;
  }
};

void add_sweep_flags(CLI::App* sub, SweepFlags& f) {
  sub->add_option("family", f.family, "collinear | three-points | lemmas | one-point")
      ->required()
      ->check(CLI::IsMember({"collinear", "three-points", "lemmas", "one-point"}));
  sub->add_option("--n", f.n, "number of CI generators, A..B")->capture_default_str();
  sub->add_option("--dmax", f.dmax, "largest generator degree")->capture_default_str();
  sub->add_option("--prime", f.prime, "field characteristic for realized instances")->capture_default_str();
  sub->add_option("--seed", f.seed, "64-bit seed for realized instances")->capture_default_str();
  sub->add_option("--threads", f.threads, "worker threads (0: LIAISON_THREADS or all cores)");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linkage, free resolutions and degree bounds over GF(p)", "liaison"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string path;
  bool nonminimal = false;
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
  gb->add_option("file", path)->required();
  auto* res = app.add_subcommand("res", "free resolution of R/I");
  res->add_option("file", path)->required();
  res->add_flag("--nonminimal", nonminimal, "skip minimalization");
  auto* bt = app.add_subcommand("betti", "minimal Betti diagram of R/I");
  bt->add_option("file", path)->required();
  auto* dg = app.add_subcommand("degree", "degree, codimension and dimension of R/I");
  dg->add_option("file", path)->required();

  std::string ci, sub_ci;
  std::optional<int> collinear_t;
  bool three = false;
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  auto* link = app.add_subcommand("link", "realize a link and compare it with the predicted shifts");
  link->add_option("--ci", ci, "degrees d1,..,dn of the complete intersection")->required();
  link->add_option("--collinear-t", collinear_t, "collinear residual of degree T");
  link->add_flag("--three-points", three, "residual of three non-collinear points");
  link->add_option("--sub-ci", sub_ci, "residual complete intersection of degrees e1,..,en");
  link->add_option("--prime", prime)->capture_default_str();
  link->add_option("--seed", seed)->capture_default_str();

  SweepFlags verify_flags, cross_flags;
  auto* verify = app.add_subcommand("verify", "exhaustive inequality sweep");
  add_sweep_flags(verify, verify_flags);
  verify->add_option("--oracle-density", verify_flags.density, "fraction of tuples realized and cross-checked");
  auto* cross = app.add_subcommand("crosscheck", "realize instances and cross-check them against the predictions");
  cross_flags.density = 1.0;
  add_sweep_flags(cross, cross_flags);
  cross->add_option("--oracle-density", cross_flags.density, "fraction of tuples realized")->capture_default_str();

  std::vector<std::string> argv_store{"liaison"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kClean;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  Outcome o;
  std::string command;
  try {
    if (*gb) {
      command = "gb";
      o = cmd_gb(path);
    } else if (*res) {
      command = "res";
      o = cmd_res(path, nonminimal);
    } else if (*bt) {
      command = "betti";
      o = cmd_betti(path);
    } else if (*dg) {
      command = "degree";
      o = cmd_degree(path);
    } else if (*link) {
      command = "link";
      const int chosen = (collinear_t ? 1 : 0) + (three ? 1 : 0) + (sub_ci.empty() ? 0 : 1);
      if (chosen != 1) throw UsageError("link: give exactly one of --collinear-t, --three-points, --sub-ci");
      const CIType type = CIType::make(parse_list(ci, "--ci"));
      const LinkSpec spec = collinear_t ? LinkSpec::collinear(type, *collinear_t)
                            : three     ? LinkSpec::three_points(type)
                                        : LinkSpec::custom(type, parse_list(sub_ci, "--sub-ci"));
      if (!is_prime(prime) || prime >= (1u << 31)) throw UsageError("--prime: not a prime below 2^31");
      o = cmd_link(spec, prime, seed);
    } else if (*verify) {
      command = "verify";
      o = report_sweep(sweep(verify_flags.options(false)));
    } else {
      command = "crosscheck";
      o = report_sweep(sweep(cross_flags.options(true)));
    }
  } catch (const ParseError& e) {
    err << path << ":" << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateRealization& e) {
    err << "degenerate realization: " << e.what() << "\n";
    return kDegenerate;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (as_json) {
    json report = {{"schema", 1}, {"command", args}, {"exit", o.code}, {"result", o.result}};
    out << report.dump(2) << "\n";
  } else {
    out << o.text;
  }
  return o.code;
}

}  // namespace liaison::cli
