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

#ifndef GREX_SEMIGROUP_HPP
#define GREX_SEMIGROUP_HPP

#include "grex/ideal.hpp"

namespace grex {

/// Numerical semigroup given by its minimal generators. Construction
/// validates positivity and gcd one (NotNumerical) and minimality of the
/// generating set (NotMinimal), sieves membership up to min*max of the
/// generators, and cross-checks the largest gap against the Apery set.
class NumericalSemigroup {
public:
  explicit NumericalSemigroup(std::vector<int64_t> gens);

  const std::vector<int64_t>& gens() const { return gens_; }
  int64_t multiplicity() const { return gens_.front(); }
  bool contains(int64_t n) const;
  /// Largest integer outside the semigroup; -1 when there is none.
  int64_t frobenius() const { return frob_; }
  /// Smallest member in each residue class mod m (m must be a nonzero
  /// member), indexed by residue; entry 0 is 0.
  std::vector<int64_t> apery(int64_t m) const;

private:
  std::vector<int64_t> gens_;
  std::vector<char> member_;
  int64_t frob_ = -1;
};

/// Defining ideal of the semigroup ring k[h] inside k[x,y,...] where the
/// i-th variable has weight gens[i], via elimination from x_i - t^{gens[i]}.
/// The result is verified to have height (#gens - 1), binomial generators,
/// and to vanish under x_i -> t^{gens[i]}.
Ideal toric_ideal(const NumericalSemigroup& h, Field field);

}  // namespace grex

#endif
