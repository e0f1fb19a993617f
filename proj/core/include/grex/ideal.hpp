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

#ifndef GREX_IDEAL_HPP
#define GREX_IDEAL_HPP

#include <mutex>

#include "grex/groebner.hpp"
#include "grex/matrix.hpp"

namespace grex {

/// Ideal handle with a shared, lazily computed, thread-safe reduced Groebner
/// basis cache. Copies share the cache; the generator list is immutable.
class Ideal {
public:
  Ideal(Ring ring, std::vector<Poly> gens);
  static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(const Ring& ring) { return Ideal(ring, {Poly::from_int(ring, 1)}); }

  const Ring& ring() const;
  const std::vector<Poly>& gens() const;
  const GroebnerBasis& gb() const;

  bool contains(const Poly& f) const;
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const;  // reduced-GB equality
  bool is_zero() const;
  bool is_unit() const;
  bool is_homogeneous() const;  // every generator homogeneous

private:
  struct Impl {
    Ring ring;
    std::vector<Poly> gens;
    std::mutex mu;
    std::shared_ptr<const GroebnerBasis> gb;
  };
  std::shared_ptr<Impl> p_;
};

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, uint32_t n);  // a^0 = (1)

/// Intersection via the auxiliary-variable construction: eliminate t from
/// t*I + (1-t)*J.
Ideal intersect(const Ideal& a, const Ideal& b);

/// Colon ideal a : b. Throws UndefinedQuotient for b = 0. The computed
/// result K is verified to satisfy K*b within a.
Ideal quotient(const Ideal& a, const Ideal& b);

/// Saturation by iterated quotients until the reduced basis stabilizes.
Ideal saturate(const Ideal& a, const Ideal& b);

/// Eliminate the named variables from a; the result lives in the ring on the
/// remaining variables (inherited weights, grevlex).
Ideal eliminate(const Ideal& a, const std::vector<int>& var_indices);

/// Apply the invertible linear change x_i -> sum_j m(i,j) x_j. Throws
/// SingularChange when m is not invertible and GradingViolation when the
/// change does not preserve weights.
Ideal substitute_linear(const Ideal& a, const FieldMat& m);

/// Krull dimension of R/a via the leading-term ideal: the largest number of
/// variables spanning a coordinate subspace not meeting LT(a). Unit ideal:
/// kMinusInf.
int64_t dimension(const Ideal& a);

/// height(a) = dim R - dim R/a in a polynomial ring; unit ideal: kPlusInf.
int64_t height(const Ideal& a);

/// The irrelevant maximal ideal (x_1, ..., x_d).
Ideal irrelevant_ideal(const Ring& ring);

/// m^k generated directly by all exponent-sum-k monomials (equals
/// power(irrelevant_ideal, k) for every weighting).
Ideal irrelevant_power(const Ring& ring, int k);

/// Exact division f / g for f in (g); internal error when not exact.
Poly exact_div(const Poly& f, const Poly& g);

}  // namespace grex

#endif
