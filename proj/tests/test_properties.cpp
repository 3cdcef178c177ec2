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

#include "support/properties.hpp"

using namespace liaison::testing;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr int kCases = 200;

void check_suite(const SuiteResult& r) {
  INFO(r.name << ": " << r.first_failure);
  CHECK(r.cases >= kCases);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("s-pairs reduce to zero") { check_suite(spairs_reduce_to_zero(kSeed, kCases)); }
TEST_CASE("normal form idempotence") { check_suite(normal_form_idempotent(kSeed + 1, kCases)); }
TEST_CASE("Hilbert numerators agree") { check_suite(hilbert_numerators_agree(kSeed + 2, kCases)); }
TEST_CASE("resolutions are complexes") { check_suite(resolutions_are_complexes(kSeed + 3, kCases)); }
TEST_CASE("Koszul symmetry") { check_suite(koszul_symmetry(kSeed + 4, kCases)); }
TEST_CASE("equal-degree complete intersections") { check_suite(equal_degree_ci(kSeed + 5, kCases)); }
TEST_CASE("linkage involution") { check_suite(linkage_involution(kSeed + 6, kCases)); }
TEST_CASE("dual twist involution") { check_suite(dual_twist_involution(kSeed + 7, kCases)); }
