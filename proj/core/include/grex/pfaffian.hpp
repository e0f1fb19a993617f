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

#ifndef GREX_PFAFFIAN_HPP
#define GREX_PFAFFIAN_HPP

#include <array>

#include "grex/graded.hpp"
#include "grex/rng.hpp"

namespace grex {

/// Alternating matrix: zero diagonal, lower triangle implied by sign. Only
/// the strictly upper triangle is stored.
class AltMatrix {
public:
  AltMatrix(Ring ring, int n);

  /// rows[i] holds the entries (i, i+1), ..., (i, n-1); rows has n-1 lists.
  static AltMatrix from_upper(Ring ring, const std::vector<std::vector<Poly>>& rows);
  /// Uniform random linear forms in every upper entry.
  static AltMatrix random_linear(const Ring& ring, int n, Rng& rng);

  const Ring& ring() const { return ring_; }
  int size() const { return n_; }
  const Poly& upper(int i, int j) const;  // requires i < j
  Poly entry(int i, int j) const;         // signed, zero diagonal
  void set_upper(int i, int j, Poly v);   // requires i < j

  PolyMat to_poly_mat() const;
  bool is_linear() const;  // every entry homogeneous of degree one (or zero)
  bool operator==(const AltMatrix& o) const;

private:
  Ring ring_;
  int n_;
  std::vector<Poly> up_;
};

/// Pfaffian of the principal submatrix on the (strictly increasing) index
/// set s, by first-row expansion memoized on index subsets. Odd |s| gives 0,
/// empty s gives 1.
Poly pfaffian(const AltMatrix& a, const std::vector<int>& s);
Poly pfaffian(const AltMatrix& a);

/// g_i = (-1)^{i+1} times the Pfaffian with row and column i deleted
/// (1-based sign). For odd n the row vector g satisfies g a = 0.
std::vector<Poly> signed_max_pfaffians(const AltMatrix& a);

/// Ideal of all t x t principal Pfaffians. t must be even (EvenRequired)
/// with 2 <= t <= n.
Ideal pf_ideal(const AltMatrix& a, int t);

/// Ideal of all t x t minors.
Ideal minors_ideal(const PolyMat& m, int t);

/// Height conditions on the chain of Pfaffian ideals at level s, for odd n:
/// ht Pf_i >= n-i+1 for even i in [n-s+1, n-1], and additionally
/// ht Pf_{n-s} >= s when n-s is even. Since the rank of an alternating
/// matrix is even, V(Pf_{2k}) = V(I_{2k-1}) = V(I_{2k}), so these heights
/// restate the minor-height form checked by check_conditions_minors.
/// Callers are expected to have certified ht Pf_{n-1} = 3 first; the report
/// repeats that height.
struct ConditionReport {
  int n = 0;
  int s = 0;
  int64_t ht_top = 0;  // height of Pf_{n-1}
  /// One row per checked ideal: (i, required height, actual height).
  std::vector<std::array<int64_t, 3>> rows;
  bool ok = false;
};
ConditionReport check_conditions(const AltMatrix& a, int s);

/// The equivalent minor-height form at level s: ht I_i >= n-i for every i
/// with n-s <= i <= n-1.
bool check_conditions_minors(const AltMatrix& a, int s);

/// Bordered-Pfaffian ideal of the almost alternating matrix [x | y]:
/// generated by the Pfaffians of the principal submatrices of
/// [[x, y], [-y^t, 0]] that contain x, one for each column subset of y of
/// size congruent to the size of x mod 2.
Ideal j_ideal(const AltMatrix& x, const PolyMat& y);
/// Number of generators the enumeration above produces.
int64_t j_ideal_generator_count(int p, int q);

/// Random invertible recombination f = g C of an ordered generator list g.
/// Requires all generators in one degree (MixedDegrees). The recombined set
/// is verified to generate the same ideal; singular draws are retried
/// (GenericityFailure). Entry j of gens is sum_r g[r] coeffs(r, j).
struct Recombination {
  std::vector<Poly> gens;
  FieldMat coeffs;
};
Recombination generic_generators(const std::vector<Poly>& gens, Rng& rng);
/// Same, starting from a minimal generating set of i; count must match its
/// size (WrongSize).
Recombination generic_generators(const Ideal& i, int count, Rng& rng);

/// K = (subset) : I with the residual-intersection certificates.
struct ResidualResult {
  Ideal k;
  bool is_residual = false;  // s <= ht K
  bool geometric = false;    // s+1 <= ht (I + K)
};
ResidualResult residual_intersection(const Ideal& i, const std::vector<Poly>& subset, int s);

/// One deformation step: a linear alternating matrix over one more variable
/// specializing to a under the new variable -> 0, whose Pfaffian ideal
/// satisfies the height conditions at level s+1. Requires the conditions at
/// level s, ht Pf_{n-1} = 3, and nvars < (s+2 choose 2). Random draws are
/// retried (GenericityFailure).
AltMatrix deform(const AltMatrix& a, int s, Rng& rng);

/// a conjugated to u^{-1} a u^{-t}. Verifies that the signed maximal
/// Pfaffian vector transforms to a scalar multiple of g u and that the
/// top Pfaffian ideal is unchanged (PresentationMismatch otherwise).
AltMatrix change_presentation(const AltMatrix& a, const FieldMat& u);

}  // namespace grex

#endif
