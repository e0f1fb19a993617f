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

#ifndef GREX_POLY_HPP
#define GREX_POLY_HPP

#include <cstdint>
#include <vector>

#include "grex/ring.hpp"

namespace grex {

/// Degree sentinels for zero modules / the unit ideal: top degree of the zero
/// module is -infinity, initial degree is +infinity, and similarly for
/// dimension (-inf for the unit ideal) and height (+inf).
inline constexpr int64_t kMinusInf = INT64_MIN;
inline constexpr int64_t kPlusInf = INT64_MAX;

struct Term {
  Coeff c;
  Monomial m;
};

/// Polynomial over a fixed ring: strictly descending sorted term list, no
/// zero coefficients. Every binary operation checks ring compatibility.
class Poly {
public:
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}

  /// Normalizes arbitrary term soup: sorts, merges duplicates, drops zeros.
  static Poly from_terms(Ring ring, std::vector<Term> terms);
  static Poly constant(const Ring& ring, Coeff c);
  static Poly from_int(const Ring& ring, long v);
  static Poly variable(const Ring& ring, int i);
  static Poly monomial(const Ring& ring, Monomial m, Coeff c);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t nterms() const { return t_.size(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_unit()); }

  const Term& lt() const;
  const Monomial& lm() const { return lt().m; }
  const Coeff& lc() const { return lt().c; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly neg() const;
  Poly scale(const Coeff& c) const;
  Poly mul_monomial(const Monomial& m) const;
  Poly pow(uint32_t k) const;
  /// this - c * m * g, the inner loop of polynomial reduction.
  Poly minus_mul(const Coeff& c, const Monomial& m, const Poly& g) const;
  Poly monic() const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  bool is_homogeneous() const;
  /// Max weighted degree over terms (kMinusInf for 0). Under a block order
  /// the leading term need not reach it, so this scans.
  int64_t degree() const;
  int64_t min_degree() const;  // kPlusInf for 0
  /// True when some term has a nonzero exponent on variable i.
  bool uses_var(int i) const;

private:
  static Poly merged(const Poly& f, const Poly& g, const Coeff* c, const Monomial* m, bool negate);

  Ring ring_;
  std::vector<Term> t_;
};

/// f with each variable replaced by images[i] (which live in a common target
/// ring). Exact; used for linear changes of coordinates, specializations and
/// vanishing checks.
Poly substitute(const Poly& f, const Ring& target, const std::vector<Poly>& images);

/// Transport f along an injective variable map: source variable i becomes
/// target variable var_map[i]. Fields must agree; weights may differ (degrees
/// are recomputed).
Poly map_vars(const Poly& f, const Ring& target, const std::vector<int>& var_map);

}  // namespace grex

#endif
