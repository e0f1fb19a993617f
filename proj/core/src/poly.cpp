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

#include "grex/poly.hpp"

#include <algorithm>

namespace grex {

Poly Poly::from_terms(Ring ring, std::vector<Term> terms) {
  const RingData& r = *ring;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return mono_cmp(r, a.m, b.m) > 0; });
  Poly p(ring);
  for (auto& t : terms) {
    if (t.c.is_zero()) continue;
    if (!p.t_.empty() && p.t_.back().m == t.m) {
      p.t_.back().c = p.t_.back().c + t.c;
      if (p.t_.back().c.is_zero()) p.t_.pop_back();
    } else {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::constant(const Ring& ring, Coeff c) {
  Poly p(ring);
  if (!c.is_zero()) p.t_.push_back(Term{std::move(c), unit_monomial(*ring)});
  return p;
}

Poly Poly::from_int(const Ring& ring, long v) {
  return constant(ring, Coeff::from_int(ring->field, v));
}

Poly Poly::variable(const Ring& ring, int i) {
  require_internal(i >= 0 && i < ring->nvars(), "variable index out of range");
  std::vector<int32_t> e(ring->vars.size(), 0);
  e[i] = 1;
  return monomial(ring, make_monomial(*ring, std::move(e)), Coeff::one(ring->field));
}

Poly Poly::monomial(const Ring& ring, Monomial m, Coeff c) {
  Poly p(ring);
  if (!c.is_zero()) p.t_.push_back(Term{std::move(c), std::move(m)});
  return p;
}

const Term& Poly::lt() const {
  require_internal(!t_.empty(), "leading term of zero polynomial");
  return t_[0];
}

// Merge two descending term lists, scaling the second by (sign, c, m).
Poly Poly::merged(const Poly& f, const Poly& g, const Coeff* c, const Monomial* m, bool negate) {
  require_same_ring(f.ring(), g.ring());
  const RingData& r = *f.ring();
  Poly out(f.ring());
  auto& dst = out.t_;
  dst.reserve(f.nterms() + g.nterms());
  size_t i = 0, j = 0;
  const auto& a = f.t_;
  const auto& b = g.t_;
  auto bterm = [&](size_t k) {
    Term t = b[k];
    if (m) t.m = mono_mul(*m, t.m);
    if (c) t.c = t.c * *c;
    if (negate) t.c = t.c.neg();
    return t;
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      dst.push_back(a[i++]);
      continue;
    }
    Term tb = bterm(j);
    int cmp = (i == a.size()) ? -1 : mono_cmp(r, a[i].m, tb.m);
    if (cmp > 0) {
      dst.push_back(a[i++]);
    } else if (cmp < 0) {
      dst.push_back(std::move(tb));
      ++j;
    } else {
      Coeff s = a[i].c + tb.c;
      if (!s.is_zero()) dst.push_back(Term{std::move(s), a[i].m});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly Poly::operator+(const Poly& o) const { return merged(*this, o, nullptr, nullptr, false); }
Poly Poly::operator-(const Poly& o) const { return merged(*this, o, nullptr, nullptr, true); }

Poly Poly::minus_mul(const Coeff& c, const Monomial& m, const Poly& g) const {
  return merged(*this, g, &c, &m, true);
}

Poly Poly::operator*(const Poly& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Poly(ring_);
  std::vector<Term> prod;
  prod.reserve(t_.size() * o.t_.size());
  for (const auto& a : t_)
    for (const auto& b : o.t_) prod.push_back(Term{a.c * b.c, mono_mul(a.m, b.m)});
  return from_terms(ring_, std::move(prod));
}

Poly Poly::neg() const {
  Poly p = *this;
  for (auto& t : p.t_) t.c = t.c.neg();
  return p;
}

Poly Poly::scale(const Coeff& c) const {
  if (c.is_zero()) return Poly(ring_);
  Poly p = *this;
  for (auto& t : p.t_) t.c = t.c * c;
  return p;
}

Poly Poly::mul_monomial(const Monomial& m) const {
  Poly p = *this;
  for (auto& t : p.t_) t.m = mono_mul(t.m, m);
  return p;
}

Poly Poly::pow(uint32_t k) const {
  Poly acc = Poly::from_int(ring_, 1);
  for (uint32_t i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

Poly Poly::monic() const {
  require_internal(!is_zero(), "monic of zero polynomial");
  return scale(lc().inv());
}

bool Poly::operator==(const Poly& o) const {
  require_same_ring(ring_, o.ring_);
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
  return true;
}

bool Poly::is_homogeneous() const {
  if (t_.empty()) return true;
  int64_t d = t_[0].m.deg;
  return std::all_of(t_.begin(), t_.end(), [&](const Term& t) { return t.m.deg == d; });
}

int64_t Poly::degree() const {
  int64_t d = kMinusInf;
  for (const auto& t : t_) d = std::max(d, t.m.deg);
  return d;
}

int64_t Poly::min_degree() const {
  int64_t d = kPlusInf;
  for (const auto& t : t_) d = std::min(d, t.m.deg);
  return d;
}

bool Poly::uses_var(int i) const {
  return std::any_of(t_.begin(), t_.end(), [&](const Term& t) { return t.m.e[i] != 0; });
}

Poly substitute(const Poly& f, const Ring& target, const std::vector<Poly>& images) {
  require_internal(images.size() == f.ring()->vars.size(), "one image per variable required");
  for (const auto& im : images) require_same_ring(im.ring(), target);
  // power cache per variable, filled on demand
  std::vector<std::vector<Poly>> pows(images.size(), std::vector<Poly>{Poly::from_int(target, 1)});
  auto power = [&](size_t i, int32_t k) -> const Poly& {
    auto& ladder = pows[i];
    while (static_cast<int32_t>(ladder.size()) <= k) ladder.push_back(ladder.back() * images[i]);
    return ladder[k];
  };
  Poly acc(target);
  for (const auto& t : f.terms()) {
    Poly term = Poly::constant(target, t.c);
    for (size_t i = 0; i < images.size(); ++i)
      if (t.m.e[i] != 0) term = term * power(i, t.m.e[i]);
    acc = acc + term;
  }
  return acc;
}

Poly map_vars(const Poly& f, const Ring& target, const std::vector<int>& var_map) {
  require_internal(f.ring()->field == target->field, "field mismatch in variable transport");
  require_internal(var_map.size() == f.ring()->vars.size(), "incomplete variable map");
  std::vector<Term> out;
  out.reserve(f.nterms());
  for (const auto& t : f.terms()) {
    std::vector<int32_t> e(target->vars.size(), 0);
    for (size_t i = 0; i < var_map.size(); ++i) {
      require_internal(t.m.e[i] == 0 || var_map[i] >= 0, "variable dropped while in use");
      if (t.m.e[i] != 0) e[var_map[i]] += t.m.e[i];
    }
    out.push_back(Term{t.c, make_monomial(*target, std::move(e))});
  }
  return Poly::from_terms(target, std::move(out));
}

}  // namespace grex
