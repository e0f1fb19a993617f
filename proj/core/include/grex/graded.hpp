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

#ifndef GREX_GRADED_HPP
#define GREX_GRADED_HPP

#include <map>

#include "grex/ideal.hpp"
#include "grex/module.hpp"

namespace grex {

/// All monomials of weighted degree d, in a fixed deterministic order.
std::vector<Monomial> monomials_of_degree(const Ring& ring, int64_t d);

/// Number of monomials of weighted degree d.
int64_t count_monomials(const Ring& ring, int64_t d);

/// dim_k [R/I]_e for e in [lo, hi], by counting monomials outside LT(I).
std::vector<int64_t> hilbert_values(const Ideal& i, int64_t lo, int64_t hi);

/// Degrees of a minimal homogeneous generating set of M relative to N,
/// i.e. degree e carries multiplicity dim [M]_e - dim([N]_e + [mM]_e).
/// Requires homogeneous generators and N within M (ContainmentViolated).
/// With N = 0 this is the generator degree multiset of M itself.
std::map<int64_t, int64_t> minimal_generator_degrees(const Ideal& m, const Ideal& n);
std::map<int64_t, int64_t> minimal_generator_degrees(const Ideal& m);

/// Largest (resp. smallest) degree of a minimal generator; kMinusInf /
/// kPlusInf for the zero ideal.
int64_t top_generator_degree(const Ideal& m);
int64_t initial_degree(const Ideal& m);

/// A minimal homogeneous generating subset, greedily selected by ascending
/// degree. Its degree multiset matches minimal_generator_degrees.
std::vector<Poly> minimal_generators(const Ideal& m);

/// Minimal graded free resolution of R/I:
///   F_pd -> ... -> F_1 -> F_0 = R -> R/I -> 0.
/// degs[i] lists generator degrees of F_i (so F_i = (+)_j R(-degs[i][j])),
/// diffs[i] is the matrix of F_{i+1} -> F_i. Every differential entry lies
/// in the irrelevant ideal and consecutive differentials compose to zero;
/// both facts are verified on construction.
struct FreeRes {
  Ring ring;
  std::vector<std::vector<int64_t>> degs;
  std::vector<PolyMat> diffs;

  int64_t length() const { return static_cast<int64_t>(degs.size()) - 1; }
};

/// Requires a homogeneous proper ideal (ProperIdealRequired otherwise).
FreeRes free_resolution(const Ideal& i, const GBOptions& opts = {});

/// Graded Betti numbers b_{i,j} of R/I read off a minimal resolution.
std::map<std::pair<int64_t, int64_t>, int64_t> betti_table(const FreeRes& res);

int64_t proj_dim_quotient(const Ideal& i);
/// depth R/I = nvars - pd(R/I).
int64_t depth_quotient(const Ideal& i);

/// Castelnuovo-Mumford regularity of R/I, max over j - i with b_{i,j} != 0.
/// Standard graded rings only (StandardGradingRequired).
int64_t regularity_quotient(const Ideal& i);

/// Largest e with dim[R/I]_e different from its eventual stable value.
/// Requires dim R/I <= 1 and an eventually constant Hilbert function.
/// Returns kMinusInf when the values never deviate.
int64_t postulation_number(const Ideal& i);

/// a-invariant of a one-dimensional Cohen-Macaulay standard graded R/I,
/// computed as regularity - 1.
int64_t a_invariant_cm1(const Ideal& i);

/// Saturation I^2 : m^infty of the square. Requires R/I one-dimensional and
/// Cohen-Macaulay (NotOneDimCM otherwise). Verifies the sandwich
/// I^2 within the result within I, and that the result agrees with I^2 away
/// from the irrelevant maximal ideal.
Ideal symbolic_square(const Ideal& i);

}  // namespace grex

#endif
