/**
 * Copyright 2026 grex authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GREX_HARNESS_HPP
#define GREX_HARNESS_HPP

#include "grex/pfaffian.hpp"
#include "grex/semigroup.hpp"

namespace grex {

/// One checked statement. lhs and rhs always hold the exact computed values
/// (numbers, or canonical ideal digests), so reports are reproducible
/// byte for byte under a fixed seed.
struct Claim {
  std::string description;
  std::string lhs;
  std::string rhs;
  std::string relation;  // "<=", "==", ">=", "in", "cmp"
  std::string verdict;   // PASS | FAIL | SKIP
  bool has_slack = false;
  int64_t slack = 0;
};

struct Report {
  std::string scenario;
  uint64_t seed = 0;
  uint32_t characteristic = 0;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> rings;
  std::vector<Claim> claims;
  std::vector<std::pair<std::string, int64_t>> timings_ms;
  GBStats gb;

  bool all_passed() const;  // no FAIL verdicts (SKIPs are allowed)
  int fail_count() const;
  /// Pretty JSON with stable key order; claim values are seed-deterministic,
  /// timings and GB statistics are informational.
  std::string to_json() const;
  /// One line per claim, for terminal output.
  std::string to_text() const;
};

/// Degree-bound audit for the second symbolic power of one monomial curve:
/// b0 of the symbolic square against max{b0(p) + max generator + largest
/// gap, 2 b0(p)}, plus the postulation cross-check of the a-invariant.
Report scenario_monomial_curve(const std::vector<int64_t>& gens, const Field& field);
/// The same audit over `trials` random semigroups (max generator <= 12, at
/// most 4 generators).
Report scenario_monomial_curve_random(int trials, uint64_t seed, const Field& field);

/// Second-symbolic-power bound for a one-dimensional Cohen-Macaulay
/// quotient in a standard graded ring: b0(sym2) <= b0(I) + reg(R/I) + 1,
/// the sharpened bound without the +1 when the resolution of I is not
/// linear, and the relative form b0(sym2/I^2) <= b0(I) + reg(R/I).
Report scenario_points(const Ideal& i);
/// Determinantal curve-of-points example plus random instances.
Report scenario_points_suite(uint64_t seed, const Field& field);

/// General hyperplane sections: saturated section ideal degree bound
/// b0(J) <= max{b0(I), b_{d-c-2}(I) - d + c + 1} per trial, with the
/// refinement for c = dim - 1 audited when applicable.
Report scenario_hyperplane(const Ideal& i, int c, int trials, uint64_t seed);
/// Twisted cubic plus two non-arithmetically-Cohen-Macaulay curves.
Report scenario_hyperplane_suite(int trials, uint64_t seed, const Field& field);

/// Partial regularity: both b0 of the saturation quotient and reg of the
/// saturated quotient are bounded by max{b_i(R/I) - i : i <= d-1}.
Report scenario_partial_regularity(const Ideal& i);
Report scenario_partial_regularity_suite(uint64_t seed, const Field& field);

/// Pfaffian powers: for condition-certified random linear alternating
/// matrices, Pf_t = m^{t/2} for even t <= n-d+1 (part a); sums of all
/// d-subset residual intersections of one generic generating set equal
/// m^{ceil((n-d)/2)} with the bordered-Pfaffian memberships (part b).
Report scenario_main10(int d, int n, int trials, uint64_t seed, const Field& field,
                       bool part_b);

/// Generic linear n x m matrices: certified minor heights force
/// I_t = m^t for t <= m - d + 1 and I_m = m^m when ht I_m = n - m + 1.
Report scenario_minors(int rows, int cols, int nvars, int trials, uint64_t seed,
                       const Field& field);

/// CLI dispatcher. Known names: monomial-curve, monomial-curve-random,
/// points, hyperplane, partial-regularity, main10a, main10b, minors.
Report run_named_scenario(const std::string& name, uint64_t seed, const Field& field);
std::vector<std::string> scenario_names();

}  // namespace grex

#endif
