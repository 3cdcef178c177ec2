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

#include "liaison/betti.hpp"
#include "liaison/resolution.hpp"

using namespace liaison;

namespace {

const Ring R2(kDefaultPrime, 2);
const Ring R3(kDefaultPrime, 3);
const Ring R4(kDefaultPrime, 4);

Polynomial x(const Ring& r, int i) { return Polynomial::variable(r, i); }
Polynomial pw(const Ring& r, int i, int e) { return Polynomial::term(r, Monomial::variable(r.nvars, i, e)); }

BettiDiagram table(std::initializer_list<std::tuple<int, int, int>> entries) {
  BettiDiagram d;
  for (auto [i, j, r] : entries) d.add(i, j, r);
  return d;
}

std::vector<Polynomial> map_vector(const GradedMap& m, const std::vector<Polynomial>& v) {
  std::vector<Polynomial> out(static_cast<std::size_t>(m.rows()), Polynomial(m.ring()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out[static_cast<std::size_t>(r)] += m.at(r, c) * v[static_cast<std::size_t>(c)];
  }
  return out;
}

}  // namespace

TEST_CASE("Koszul complexes resolve complete intersections") {
  const std::vector<int> degrees{2, 2, 6};
  const Ideal I(R3, {pw(R3, 0, 2), pw(R3, 1, 2), pw(R3, 2, 6)});
  const auto res = minimalize(free_resolution(I));
  CHECK(betti(res) == koszul_diagram(degrees));
  CHECK(res.is_complex());
  CHECK(res.minimal);
}

TEST_CASE("twisted cubic") {
  const auto a = x(R4, 0), b = x(R4, 1), c = x(R4, 2), d = x(R4, 3);
  const Ideal I(R4, {a * c - b * b, b * d - c * c, a * d - b * c});
  const auto res = minimalize(free_resolution(I));
  CHECK(betti(res) == table({{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}));
  const auto h = hilbert_degree(I);
  CHECK(h.degree == 3);
  CHECK(h.dimension == 2);
}

TEST_CASE("non-saturated line with an embedded point") {
  // (x^2, xy): the line x = 0 plus an embedded component at the origin.
  const Ideal I(R2, {pw(R2, 0, 2), x(R2, 0) * x(R2, 1)});
  const auto res = minimalize(free_resolution(I));
  CHECK(betti(res) == table({{0, 0, 1}, {1, 2, 2}, {2, 3, 1}}));
  CHECK(hilbert_numerator(res) == std::vector<std::int64_t>{1, 0, -2, 1});
  const auto h = hilbert_degree(I);
  CHECK(h.codim == 1);
  CHECK(h.degree == 1);
}

TEST_CASE("Hilbert numerator of monomial ideals") {
  const std::vector<Monomial> gens{Monomial{2, 0, 0}, Monomial{0, 2, 0}, Monomial{0, 0, 6}};
  const auto N = hilbert_numerator(gens, 3);
  // (1 - t^2)^2 (1 - t^6)
  std::vector<std::int64_t> expect(11, 0);
  expect[0] = 1;
  expect[2] = -2;
  expect[4] = 1;
  expect[6] = -1;
  expect[8] = 2;
  expect[10] = -1;
  CHECK(N == expect);
  const auto h = hilbert_from_numerator(N, 3);
  CHECK(h.degree == 24);
  CHECK(h.dimension == 0);
}

TEST_CASE("unit and zero ideals") {
  const auto unit = hilbert_degree(Ideal::unit(R3));
  CHECK(unit.unit_ideal);
  CHECK(unit.degree == 0);
  CHECK(unit.codim == 4);
  const auto zero = hilbert_degree(Ideal::zero(R3));
  CHECK(zero.degree == 1);
  CHECK(zero.codim == 0);
}

TEST_CASE("minimalization keeps the Hilbert numerator") {
  const Ideal I(R3, {x(R3, 0) * x(R3, 1), x(R3, 0) * x(R3, 2), x(R3, 1) * x(R3, 2), pw(R3, 0, 2) - pw(R3, 1, 2)});
  const auto frame = free_resolution(I);
  const auto minimal = minimalize(frame);
  CHECK(frame.is_complex());
  CHECK(minimal.is_complex());
  CHECK_FALSE(minimal.has_unit_entry());
  CHECK(hilbert_numerator(frame) == hilbert_numerator(minimal));
  for (int k = 0; k <= minimal.length(); ++k) CHECK(minimal.rank(k) <= frame.rank(k));
}

TEST_CASE("cancelling a unit pair") {
  // 0 -> R(-1) --[1]--> R(-1) --[x]--> R: the trailing pair splits off.
  Resolution res;
  res.ring = R2;
  GradedMap d1(R2, {0}, {1});
  d1.at(0, 0) = x(R2, 0);
  GradedMap d2(R2, {1}, {1});
  d2.at(0, 0) = Polynomial::constant(R2, 1);
  res.maps = {d1, d2};
  CHECK(res.has_unit_entry());
  cancel_unit(res, 1, 0, 0);
  CHECK(res.length() == 0);
  CHECK(res.rank(0) == 1);
}

TEST_CASE("graded maps") {
  GradedMap m(R2, {0, 0}, {1, 2});
  m.at(0, 0) = x(R2, 0);
  m.at(1, 1) = pw(R2, 1, 2);
  CHECK(m.is_graded());
  m.at(0, 1) = x(R2, 0);
  CHECK_FALSE(m.is_graded());
  int r = -1, c = -1;
  CHECK_FALSE(m.find_unit(r, c));
  GradedMap other(R2, {1, 2}, {3});
  CHECK_NOTHROW(compose(m, other));
  CHECK_THROWS_AS(compose(other, other), RingMismatch);
}

TEST_CASE("lifting through the frame") {
  const Ideal I(R3, {x(R3, 0) * x(R3, 1), x(R3, 1) * x(R3, 2), pw(R3, 2, 2)});
  const SchreyerFrame frame(I);
  const auto& res = frame.resolution();
  for (int level = 1; level <= res.length(); ++level) {
    const auto& d = res.maps[static_cast<std::size_t>(level - 1)];
    for (int c = 0; c < d.cols(); ++c) {
      std::vector<Polynomial> q(static_cast<std::size_t>(d.cols()), Polynomial(R3));
      q[static_cast<std::size_t>(c)] = x(R3, c % 3);
      const auto w = map_vector(d, q);
      const auto lifted = frame.lift(level, w);
      CHECK(map_vector(d, lifted) == w);
    }
  }
  CHECK_THROWS_AS(frame.lift(1, {x(R3, 0)}), std::domain_error);
}

TEST_CASE("resolution length is bounded by the variable count") {
  const Ideal m(R4, {x(R4, 0), x(R4, 1), x(R4, 2), x(R4, 3)});
  const auto res = minimalize(free_resolution(m));
  CHECK(res.length() == 4);
  const std::vector<int> ones{1, 1, 1, 1};
  CHECK(betti(res) == koszul_diagram(ones));
}
