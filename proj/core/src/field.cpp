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

#include "grex/field.hpp"

namespace grex {

namespace {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

int64_t mod_inv(int64_t a, int64_t p) {
  // extended Euclid; a in [1, p)
  int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  require_internal(r == 1, "mod_inv: argument not a unit");
  return t < 0 ? t + p : t;
}

}  // namespace

Field Field::prime(uint32_t p) {
  if (p == 0 || p >= (1u << 31) || !is_prime_u32(p))
    fail_input("BadCharacteristic", "characteristic must be 0 or a prime below 2^31, got " + std::to_string(p));
  return Field{p};
}

Coeff Coeff::zero(const Field& f) {
  if (f.is_rational()) return Coeff(mpq_class(0));
  return Coeff(FpElem{0, f.ch});
}

Coeff Coeff::one(const Field& f) {
  if (f.is_rational()) return Coeff(mpq_class(1));
  return Coeff(FpElem{1, f.ch});
}

Coeff Coeff::from_int(const Field& f, long v) {
  if (f.is_rational()) return Coeff(mpq_class(v));
  int64_t p = f.ch;
  int64_t r = v % p;
  if (r < 0) r += p;
  return Coeff(FpElem{r, f.ch});
}

Coeff Coeff::from_mpq(mpq_class q) {
  q.canonicalize();
  return Coeff(std::move(q));
}

Coeff Coeff::random(const Field& f, Rng& rng, bool nonzero) {
  for (;;) {
    Coeff c = f.is_rational() ? from_int(f, static_cast<long>(rng.range(-10, 10)))
                              : from_int(f, static_cast<long>(rng.below(f.ch)));
    if (!nonzero || !c.is_zero()) return c;
  }
}

bool Coeff::is_zero() const {
  if (auto* e = std::get_if<FpElem>(&v_)) return e->v == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool Coeff::is_one() const {
  if (auto* e = std::get_if<FpElem>(&v_)) return e->v == 1;
  return std::get<mpq_class>(v_) == 1;
}

// Binary ops require matching field kinds; a mismatch is an engine bug
// because every public entry point checks ring compatibility first.
#define GREX_COEFF_BINOP(name, fpexpr, qexpr)                                        \
  Coeff Coeff::name(const Coeff& o) const {                                          \
    if (auto* a = std::get_if<FpElem>(&v_)) {                                        \
      auto* b = std::get_if<FpElem>(&o.v_);                                          \
      require_internal(b != nullptr && a->p == b->p, "coefficient field mismatch");  \
      int64_t p = a->p;                                                              \
      (void)p;                                                                       \
      return Coeff(FpElem{(fpexpr), a->p});                                          \
    }                                                                                \
    require_internal(o.is_rational(), "coefficient field mismatch");                 \
    return Coeff(mpq_class(qexpr));                                                  \
  }

GREX_COEFF_BINOP(operator+, (a->v + b->v) % p, rat() + o.rat())
GREX_COEFF_BINOP(operator-, ((a->v - b->v) % p + p) % p, rat() - o.rat())
GREX_COEFF_BINOP(operator*, (a->v * b->v) % p, rat() * o.rat())
#undef GREX_COEFF_BINOP

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inv(); }

Coeff Coeff::neg() const {
  if (auto* e = std::get_if<FpElem>(&v_))
    return Coeff(FpElem{e->v == 0 ? 0 : static_cast<int64_t>(e->p) - e->v, e->p});
  return Coeff(mpq_class(-rat()));
}

Coeff Coeff::inv() const {
  if (is_zero()) fail_input("DivisionByZero", "inverse of zero");
  if (auto* e = std::get_if<FpElem>(&v_)) return Coeff(FpElem{mod_inv(e->v, e->p), e->p});
  return Coeff(mpq_class(1 / rat()));
}

bool Coeff::operator==(const Coeff& o) const {
  if (auto* a = std::get_if<FpElem>(&v_)) {
    auto* b = std::get_if<FpElem>(&o.v_);
    require_internal(b != nullptr && a->p == b->p, "coefficient field mismatch");
    return a->v == b->v;
  }
  require_internal(o.is_rational(), "coefficient field mismatch");
  return rat() == o.rat();
}

std::string Coeff::str() const {
  if (auto* e = std::get_if<FpElem>(&v_)) return std::to_string(e->v);
  return rat().get_str();
}

}  // namespace grex
