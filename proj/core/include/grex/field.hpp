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

#ifndef GREX_FIELD_HPP
#define GREX_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "grex/error.hpp"
#include "grex/rng.hpp"

namespace grex {

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p
/// with p < 2^31 so that products of residues fit in int64.
struct Field {
  uint32_t ch = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(uint32_t p);

  bool is_rational() const { return ch == 0; }
  bool operator==(const Field&) const = default;
};

struct FpElem {
  int64_t v;   // canonical residue in [0, p)
  uint32_t p;  // modulus
};

/// Exact field element. Rationals are GMP-backed and always canonical;
/// prime-field elements are machine integers.
class Coeff {
public:
  static Coeff zero(const Field& f);
  static Coeff one(const Field& f);
  static Coeff from_int(const Field& f, long v);
  static Coeff from_mpq(mpq_class q);
  /// Uniform over F_p; over Q a small integer in [-10, 10] (nonzero forces
  /// a unit in either case).
  static Coeff random(const Field& f, Rng& rng, bool nonzero = false);

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class& rat() const { return std::get<mpq_class>(v_); }

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;  // throws DivisionByZero
  Coeff neg() const;
  Coeff inv() const;  // throws DivisionByZero
  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  std::string str() const;

private:
  explicit Coeff(FpElem e) : v_(e) {}
  explicit Coeff(mpq_class q) : v_(std::move(q)) {}

  std::variant<FpElem, mpq_class> v_;
};

}  // namespace grex

#endif
