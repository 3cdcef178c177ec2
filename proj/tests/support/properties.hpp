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
#include <vector>

namespace liaison::testing {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok(int min_cases) const { return cases >= min_cases && failures == 0; }
};

SuiteResult spairs_reduce_to_zero(std::uint64_t seed, int cases);
SuiteResult normal_form_idempotent(std::uint64_t seed, int cases);
SuiteResult hilbert_numerators_agree(std::uint64_t seed, int cases);
SuiteResult resolutions_are_complexes(std::uint64_t seed, int cases);
SuiteResult koszul_symmetry(std::uint64_t seed, int cases);
SuiteResult equal_degree_ci(std::uint64_t seed, int cases);
SuiteResult linkage_involution(std::uint64_t seed, int cases);
SuiteResult dual_twist_involution(std::uint64_t seed, int cases);

std::vector<SuiteResult> all_property_suites(std::uint64_t seed, int cases);

}  // namespace liaison::testing
