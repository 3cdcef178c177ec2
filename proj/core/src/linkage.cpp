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

#include "liaison/linkage.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace liaison {

namespace {

std::int64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Lexicographically ordered i-subsets of {0..n-1}.
std::vector<std::vector<int>> subsets(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int j = start; j < n; ++j) {
      cur.push_back(j);
      rec(j + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

BettiDiagram remove_shift(const BettiDiagram& d, int column, int shift, int count) {
  BettiDiagram out;
  for (const auto& [key, r] : d.entries()) {
    int rank = r;
    if (key.first == column && key.second == shift) rank -= count;
    if (rank < 0) throw std::logic_error("removing more summands than present");
    if (rank > 0) out.add(key.first, key.second, rank);
  }
  out.codim = d.codim;
  return out;
}

}  // namespace

// -------------------------------------------------------------------- specs

CIType CIType::make(std::vector<int> degrees, int min_length, int min_degree) {
  if (static_cast<int>(degrees.size()) < min_length) {
    throw std::invalid_argument("complete intersection needs at least " + std::to_string(min_length) +
                                " degrees");
  }
  for (int d : degrees) {
    if (d < min_degree) {
      throw std::invalid_argument("degree " + std::to_string(d) + " below " + std::to_string(min_degree));
    }
  }
  std::sort(degrees.begin(), degrees.end());
  return CIType{std::move(degrees)};
}

int CIType::alpha() const { return std::accumulate(d.begin(), d.end(), 0); }

std::int64_t CIType::degree() const {
  std::int64_t p = 1;
  for (int x : d) p *= x;
  return p;
}

std::string CIType::label() const { return "(" + join(d) + ")"; }

LinkSpec LinkSpec::collinear(const CIType& ci, int t) {
  if (ci.d.empty() || t < 1 || t > ci.d.back()) {
    throw std::invalid_argument("collinear residual degree t must lie in [1, d_n]");
  }
  LinkSpec s;
  s.ci = ci;
  s.kind = ResidualKind::kCollinear;
  s.t = t;
  return s;
}

LinkSpec LinkSpec::three_points(const CIType& ci) {
  if (ci.n() < 3) throw std::invalid_argument("three-point residual needs n >= 3");
  LinkSpec s;
  s.ci = ci;
  s.kind = ResidualKind::kThreePoints;
  return s;
}

LinkSpec LinkSpec::custom(const CIType& ci, std::vector<int> e) {
  if (static_cast<int>(e.size()) != ci.n()) {
    throw std::invalid_argument("residual type must have as many degrees as the ambient type");
  }
  std::sort(e.begin(), e.end());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 1 || e[i] > ci.d[i]) {
      throw std::invalid_argument("residual degrees must satisfy 1 <= e_i <= d_i after sorting");
    }
  }
  LinkSpec s;
  s.ci = ci;
  s.kind = ResidualKind::kCustom;
  s.e = std::move(e);
  return s;
}

int LinkSpec::alpha_z() const {
  switch (kind) {
    case ResidualKind::kCollinear: return n() - 1 + t;
    case ResidualKind::kCustom: return std::accumulate(e.begin(), e.end(), 0);
    case ResidualKind::kThreePoints: break;
  }
  throw std::logic_error("three points are not a complete intersection");
}

std::int64_t LinkSpec::degree_z() const {
  switch (kind) {
    case ResidualKind::kCollinear: return t;
    case ResidualKind::kThreePoints: return 3;
    case ResidualKind::kCustom: {
      std::int64_t p = 1;
      for (int x : e) p *= x;
      return p;
    }
  }
  return 0;
}

std::string LinkSpec::label() const {
  switch (kind) {
    case ResidualKind::kCollinear: return "collinear" + ci.label() + " t=" + std::to_string(t);
    case ResidualKind::kThreePoints: return "three-points" + ci.label();
    case ResidualKind::kCustom: return "sub-ci" + ci.label() + " e=(" + join(e) + ")";
  }
  return {};
}

ShiftProfile ShiftProfile::from_diagram(const BettiDiagram& d, std::int64_t degree, std::string scenario) {
  ShiftProfile p;
  p.p = d.length();
  for (int i = 1; i <= p.p; ++i) {
    p.m.push_back(d.min_shift(i));
    p.M.push_back(d.max_shift(i));
  }
  p.degree = degree;
  p.scenario = std::move(scenario);
  return p;
}

// ---------------------------------------------------------------- complexes

Resolution koszul_complex(std::span<const Polynomial> fs) {
  if (fs.empty()) throw std::invalid_argument("koszul complex of an empty sequence");
  const Ring& ring = fs.front().ring();
  const int n = static_cast<int>(fs.size());
  std::vector<std::vector<std::vector<int>>> basis;
  std::vector<std::map<std::vector<int>, int>> where(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<int>> shifts;
  for (int i = 0; i <= n; ++i) {
    basis.push_back(subsets(n, i));
    std::vector<int> sh;
    for (std::size_t a = 0; a < basis.back().size(); ++a) {
      const auto& T = basis.back()[a];
      where[static_cast<std::size_t>(i)][T] = static_cast<int>(a);
      int s = 0;
      for (int j : T) s += fs[static_cast<std::size_t>(j)].degree();
      sh.push_back(s);
    }
    shifts.push_back(std::move(sh));
  }
  Resolution K;
  K.ring = ring;
  for (int i = 1; i <= n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    GradedMap d(ring, shifts[ui - 1], shifts[ui]);
    for (std::size_t c = 0; c < basis[ui].size(); ++c) {
      const auto& T = basis[ui][c];
      for (std::size_t pos = 0; pos < T.size(); ++pos) {
        std::vector<int> rest = T;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
        const int r = where[ui - 1].at(rest);
        const Polynomial& f = fs[static_cast<std::size_t>(T[pos])];
        d.at(r, static_cast<int>(c)) = pos % 2 == 0 ? f : -f;
      }
    }
    K.maps.push_back(std::move(d));
  }
  K.minimal = true;
  return K;
}

MappingCone mapping_cone_resolution(std::span<const Polynomial> gens, const Ideal& IZ) {
  const Ring& ring = IZ.ring();
  const int n = static_cast<int>(gens.size());
  const Resolution K = koszul_complex(gens);
  const SchreyerFrame frame(IZ);
  const Resolution& frame_res = frame.resolution();

  // Comparison map from the Koszul complex into the frame, lifted level by level.
  std::vector<GradedMap> phi;
  {
    GradedMap id(ring, {0}, {0});
    id.at(0, 0) = Polynomial::constant(ring, 1);
    phi.push_back(std::move(id));
  }
  for (int k = 1; k <= n; ++k) {
    GradedMap map(ring, frame_res.shifts(k), K.shifts(k));
    const GradedMap& dk = K.maps[static_cast<std::size_t>(k - 1)];
    const GradedMap& prev = phi.back();
    for (int c = 0; c < map.cols(); ++c) {
      std::vector<Polynomial> w(static_cast<std::size_t>(prev.rows()), Polynomial(ring));
      for (int r = 0; r < prev.rows(); ++r) {
        for (int j = 0; j < prev.cols(); ++j) {
          if (!prev.at(r, j).is_zero() && !dk.at(j, c).is_zero()) {
            w[static_cast<std::size_t>(r)] += prev.at(r, j) * dk.at(j, c);
          }
        }
      }
      map.set_column(c, frame.lift(k, w));
    }
    phi.push_back(std::move(map));
  }

  Resolution G = minimalize(frame_res, &phi);
  if (G.length() != n) {
    throw std::runtime_error("residual ideal does not have a length-" + std::to_string(n) +
                             " resolution");
  }

  int alpha = 0;
  for (const auto& f : gens) alpha += f.degree();

  // Cone_k = dual(K_{n-k}) + dual(G_{n-k+1}), twisted by -alpha.
  auto dual = [&](const std::vector<int>& s) {
    std::vector<int> out;
    for (int x : s) out.push_back(alpha - x);
    return out;
  };
  auto kpart = [&](int k) { return k <= n ? dual(K.shifts(n - k)) : std::vector<int>{}; };
  auto gpart = [&](int k) { return k >= 1 ? dual(G.shifts(n - k + 1)) : std::vector<int>{}; };
  auto cone_shifts = [&](int k) {
    auto s = kpart(k);
    auto g = gpart(k);
    s.insert(s.end(), g.begin(), g.end());
    return s;
  };

  Resolution cone;
  cone.ring = ring;
  for (int k = 1; k <= n + 1; ++k) {
    GradedMap d(ring, cone_shifts(k - 1), cone_shifts(k));
    const int rowB = static_cast<int>(kpart(k - 1).size());
    const int colB = static_cast<int>(kpart(k).size());
    if (k <= n) {
      const GradedMap& dK = K.maps[static_cast<std::size_t>(n - k)];  // K_{n-k+1} -> K_{n-k}
      for (int r = 0; r < rowB; ++r) {
        for (int c = 0; c < colB; ++c) d.at(r, c) = dK.at(c, r);
      }
    }
    const GradedMap& ph = phi[static_cast<std::size_t>(n - k + 1)];  // K_{n-k+1} -> G_{n-k+1}
    for (int r = 0; r < rowB; ++r) {
      for (int c = 0; c < ph.rows(); ++c) d.at(r, colB + c) = ph.at(c, r);
    }
    if (k >= 2) {
      const GradedMap& dG = G.maps[static_cast<std::size_t>(n - k + 1)];  // G_{n-k+2} -> G_{n-k+1}
      for (int r = 0; r < dG.cols(); ++r) {
        for (int c = 0; c < dG.rows(); ++c) d.at(rowB + r, colB + c) = -dG.at(c, r);
      }
    }
    cone.maps.push_back(std::move(d));
  }
  // The dual of the identity in degree zero splits off.
  cancel_unit(cone, n, 0, 0);

  MappingCone out;
  out.residual_betti = betti(G);
  out.residual = std::move(G);
  out.complex = std::move(cone);
  return out;
}

Ideal link_ideal(const Ideal& IX, const Ideal& IZ) {
  if (!IZ.contains(IX)) throw std::invalid_argument("link_ideal: I_X is not contained in I_Z");
  return colon_ideal(IX, IZ);
}

bool minimality_test(const Ideal& IX, const Ideal& IZ) {
  if (!IZ.contains(IX)) throw std::invalid_argument("minimality_test: I_X is not contained in I_Z");
  const Ideal mI = maximal_times(IZ);
  return std::all_of(IX.generators().begin(), IX.generators().end(),
                     [&](const Polynomial& g) { return mI.contains(g); });
}

// ----------------------------------------------------------------- profiles

std::vector<ShiftProfile> collinear_profile(const CIType& ci, int t) {
  const int n = ci.n();
  if (n < 3) throw std::invalid_argument("collinear profile needs n >= 3");
  if (t < 1 || t > ci.d.back()) throw std::invalid_argument("t must lie in [1, d_n]");
  const int alpha = ci.alpha();
  const auto& d = ci.d;
  const int dn = d.back();

  std::vector<int> m_base;
  int partial = 0;
  for (int i = 1; i < n; ++i) {
    partial += d[static_cast<std::size_t>(i - 1)];
    m_base.push_back(std::min(alpha - n - t + i, partial));
  }
  std::vector<int> M_base{std::max(dn, alpha - t - n + 1)};
  for (int i = 2; i < n; ++i) M_base.push_back(alpha - n + i - 1);
  M_base.push_back(alpha - 1);

  std::vector<std::pair<std::string, int>> lower{{"lower:no-cancel", alpha - t}};
  const bool matches_lower =
      std::any_of(d.begin(), d.end() - 1, [&](int x) { return x == t; });
  if (matches_lower && t < dn) lower.emplace_back("lower:case1", alpha - 1);
  if (t == dn) lower.emplace_back("lower:case2", alpha - 1);

  std::vector<std::pair<std::string, int>> upper{{"upper:case1", M_base.front()}};
  if (alpha - t - n + 1 == dn - 1 && d.front() < dn) upper.emplace_back("upper:case2", dn - 1);

  std::vector<ShiftProfile> out;
  for (const auto& [ul, m1] : upper) {
    for (const auto& [ll, mn] : lower) {
      ShiftProfile p;
      p.p = n;
      p.m = m_base;
      p.m.push_back(mn);
      p.M = M_base;
      p.M.front() = m1;
      p.degree = ci.degree() - t;
      p.scenario = ll + "/" + ul;
      out.push_back(std::move(p));
    }
  }
  return out;
}

BettiDiagram three_points_diagram(int n) {
  if (n < 2) throw std::invalid_argument("three points need at least P^2");
  BettiDiagram g = BettiDiagram::cyclic();
  for (int i = 1; i <= n; ++i) {
    const auto linear = binom(n - 2, i);
    const auto quadratic = 3 * binom(n - 2, i - 1) + 2 * binom(n - 2, i - 2);
    if (linear > 0) g.add(i, i, static_cast<int>(linear));
    if (quadratic > 0) g.add(i, i + 1, static_cast<int>(quadratic));
  }
  g.codim = n;
  return g;
}

ThreePointPrediction threepoints_profile(const CIType& ci) {
  const int n = ci.n();
  if (n < 3) throw std::invalid_argument("three-point profile needs n >= 3");
  const int alpha = ci.alpha();
  ThreePointPrediction out;
  out.residual = three_points_diagram(n);
  out.nonminimal = mapping_cone_diagram(koszul_diagram(ci.d), out.residual, alpha);
  const int twos = static_cast<int>(std::count(ci.d.begin(), ci.d.end(), 2));
  // Each degree-2 generator may cancel one alpha-2 summand between the last two steps.
  for (int c = 0; c <= std::min(twos, 3); ++c) {
    BettiDiagram pruned = remove_shift(out.nonminimal, n, alpha - 2, c);
    pruned = remove_shift(pruned, n - 1, alpha - 2, c);
    const std::string mn = c == 3 ? "alpha-1" : "alpha-2";
    out.profiles.push_back(ShiftProfile::from_diagram(
        pruned, ci.degree() - 3, "cancel=" + std::to_string(c) + "/m_n=" + mn));
  }
  return out;
}

}  // namespace liaison
