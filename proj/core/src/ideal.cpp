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

#include "grex/ideal.hpp"

#include <algorithm>
#include <set>

namespace grex {

Ideal::Ideal(Ring ring, std::vector<Poly> gens) : p_(std::make_shared<Impl>()) {
  p_->ring = std::move(ring);
  for (auto& g : gens) {
    require_same_ring(g.ring(), p_->ring);
    if (!g.is_zero()) p_->gens.push_back(std::move(g));
  }
}

const Ring& Ideal::ring() const { return p_->ring; }
const std::vector<Poly>& Ideal::gens() const { return p_->gens; }

const GroebnerBasis& Ideal::gb() const {
  std::lock_guard<std::mutex> lock(p_->mu);
  if (!p_->gb) p_->gb = std::make_shared<GroebnerBasis>(buchberger(p_->ring, p_->gens));
  return *p_->gb;
}

bool Ideal::contains(const Poly& f) const { return normal_form(f, gb()).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(p_->ring, other.ring());
  return std::all_of(other.gens().begin(), other.gens().end(),
                     [&](const Poly& g) { return contains(g); });
}

bool Ideal::equals(const Ideal& other) const {
  require_same_ring(p_->ring, other.ring());
  const auto& a = gb().gens;
  const auto& b = other.gb().gens;
  return a == b;
}

bool Ideal::is_zero() const { return gb().gens.empty(); }

bool Ideal::is_unit() const {
  const auto& g = gb().gens;
  return g.size() == 1 && g[0].is_constant() && !g[0].is_zero();
}

bool Ideal::is_homogeneous() const {
  return std::all_of(p_->gens.begin(), p_->gens.end(),
                     [](const Poly& g) { return g.is_homogeneous(); });
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Poly> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Poly> gens;
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal power(const Ideal& a, uint32_t n) {
  if (n == 0) return Ideal::unit(a.ring());
  // products of n generators, combinations with repetition
  std::vector<Poly> gens;
  const auto& g = a.gens();
  std::vector<size_t> idx(n, 0);
  if (g.empty()) return Ideal::zero(a.ring());
  for (;;) {
    Poly prod = g[idx[0]];
    for (uint32_t k = 1; k < n; ++k) prod = prod * g[idx[k]];
    gens.push_back(std::move(prod));
    // next nondecreasing index tuple
    int pos = static_cast<int>(n) - 1;
    while (pos >= 0 && idx[pos] == g.size() - 1) --pos;
    if (pos < 0) break;
    size_t v = idx[pos] + 1;
    for (uint32_t k = pos; k < n; ++k) idx[k] = v;
  }
  return Ideal(a.ring(), std::move(gens));
}

namespace {

// Fresh variable name not colliding with the ring's.
std::string fresh_var(const RingData& r, const std::string& base) {
  std::set<std::string> taken(r.vars.begin(), r.vars.end());
  if (!taken.count(base)) return base;
  for (int i = 0;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!taken.count(cand)) return cand;
  }
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const Ring& R = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(R);
  int n = R->nvars();
  std::vector<std::string> vars{fresh_var(*R, "t")};
  vars.insert(vars.end(), R->vars.begin(), R->vars.end());
  std::vector<int64_t> weights{1};
  weights.insert(weights.end(), R->weights.begin(), R->weights.end());
  Ring T = make_ring(R->field, std::move(vars), std::move(weights),
                     OrderSpec{OrderKind::block, 1});
  std::vector<int> up(n);
  for (int i = 0; i < n; ++i) up[i] = i + 1;
  Poly t = Poly::variable(T, 0);
  Poly one_minus_t = Poly::from_int(T, 1) - t;
  std::vector<Poly> gens;
  for (const auto& f : a.gens()) gens.push_back(t * map_vars(f, T, up));
  for (const auto& g : b.gens()) gens.push_back(one_minus_t * map_vars(g, T, up));
  GroebnerBasis gb = buchberger(T, gens);
  std::vector<int> down(n + 1, -1);
  for (int i = 0; i < n; ++i) down[i + 1] = i;
  std::vector<Poly> result;
  for (const auto& h : gb.gens)
    if (!h.uses_var(0)) result.push_back(map_vars(h, R, down));
  return Ideal(R, std::move(result));
}

Poly exact_div(const Poly& f, const Poly& g) {
  require_internal(!g.is_zero(), "division by zero polynomial");
  Poly r = f;
  std::vector<Term> q;
  while (!r.is_zero()) {
    require_internal(mono_divides(g.lm(), r.lm()), "division not exact");
    Coeff c = r.lc() / g.lc();
    Monomial m = mono_div(r.lm(), g.lm());
    q.push_back(Term{c, m});
    r = r.minus_mul(c, m, g);
  }
  return Poly::from_terms(f.ring(), std::move(q));
}

namespace {

Ideal quotient_single(const Ideal& a, const Poly& g) {
  Ideal inter = intersect(a, Ideal(a.ring(), {g}));
  std::vector<Poly> gens;
  for (const auto& h : inter.gens()) gens.push_back(exact_div(h, g));
  return Ideal(a.ring(), std::move(gens));
}

}  // namespace

Ideal quotient(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) fail_input("UndefinedQuotient", "colon ideal by the zero ideal");
  bool first = true;
  Ideal acc = Ideal::zero(a.ring());
  for (const auto& g : b.gens()) {
    Ideal qi = quotient_single(a, g);
    acc = first ? qi : intersect(acc, qi);
    first = false;
  }
  // the defining containment, checked on every call
  for (const auto& k : acc.gens())
    for (const auto& g : b.gens())
      require_internal(a.contains(k * g), "quotient postcondition violated");
  return acc;
}

Ideal saturate(const Ideal& a, const Ideal& b) {
  Ideal cur = a;
  for (int iter = 0; iter < 1000; ++iter) {
    Ideal next = quotient(cur, b);
    if (next.equals(cur)) {
      require_internal(cur.contains(a), "saturation lost the original ideal");
      return cur;
    }
    cur = next;
  }
  fail_internal("saturation did not stabilize");
}

Ideal eliminate(const Ideal& a, const std::vector<int>& var_indices) {
  const Ring& R = a.ring();
  int n = R->nvars();
  std::vector<char> drop(n, 0);
  for (int v : var_indices) {
    if (v < 0 || v >= n) fail_input("BadVariable", "eliminate: variable index out of range");
    drop[v] = 1;
  }
  int k = static_cast<int>(std::count(drop.begin(), drop.end(), 1));
  if (k == 0) return a;
  if (k == n) fail_input("BadVariable", "cannot eliminate every variable");

  // block ring: eliminated variables first, original relative order kept
  std::vector<std::string> vars;
  std::vector<int64_t> weights;
  std::vector<int> up(n, -1);
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i < n; ++i) {
      if ((drop[i] == 1) != (pass == 0)) continue;
      up[i] = static_cast<int>(vars.size());
      vars.push_back(R->vars[i]);
      weights.push_back(R->weights[i]);
    }
  }
  Ring B = make_ring(R->field, vars, weights, OrderSpec{OrderKind::block, k});
  std::vector<Poly> gens;
  for (const auto& f : a.gens()) gens.push_back(map_vars(f, B, up));
  GroebnerBasis gb = buchberger(B, gens);

  std::vector<std::string> rvars(vars.begin() + k, vars.end());
  std::vector<int64_t> rweights(weights.begin() + k, weights.end());
  Ring S = make_ring(R->field, rvars, rweights, OrderSpec{});
  std::vector<int> down(n, -1);
  for (int i = 0; i < n; ++i) down[i] = i < k ? -1 : i - k;
  std::vector<Poly> kept;
  for (const auto& h : gb.gens) {
    bool free = true;
    for (int i = 0; i < k && free; ++i)
      if (h.uses_var(i)) free = false;
    if (free) kept.push_back(map_vars(h, S, down));
  }
  return Ideal(S, std::move(kept));
}

Ideal substitute_linear(const Ideal& a, const FieldMat& m) {
  const Ring& R = a.ring();
  int n = R->nvars();
  require_internal(m.rows == n && m.cols == n && m.field == R->field,
                   "substitution matrix shape mismatch");
  if (!m.inverse()) fail_input("SingularChange", "substitution matrix is singular");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!m.at(i, j).is_zero() && R->weights[i] != R->weights[j])
        fail_input("GradingViolation",
                   "substitution mixes variables of different weights");
  std::vector<Poly> images;
  for (int i = 0; i < n; ++i) {
    Poly img(R);
    for (int j = 0; j < n; ++j)
      if (!m.at(i, j).is_zero()) img = img + Poly::variable(R, j).scale(m.at(i, j));
    images.push_back(std::move(img));
  }
  std::vector<Poly> gens;
  for (const auto& f : a.gens()) gens.push_back(substitute(f, R, images));
  return Ideal(R, std::move(gens));
}

int64_t dimension(const Ideal& a) {
  const auto& gb = a.gb().gens;
  int n = a.ring()->nvars();
  require_internal(n <= 30, "dimension search limited to 30 variables");
  std::vector<uint32_t> supports;
  for (const auto& g : gb) {
    uint32_t s = 0;
    for (int i = 0; i < n; ++i)
      if (g.lm().e[i] > 0) s |= 1u << i;
    supports.push_back(s);
  }
  int64_t best = -1;
  for (uint32_t S = 0; S < (1u << n); ++S) {
    bool ok = true;
    for (uint32_t sup : supports)
      if ((sup & ~S) == 0) {
        ok = false;
        break;
      }
    if (ok) best = std::max<int64_t>(best, __builtin_popcount(S));
  }
  return best < 0 ? kMinusInf : best;
}

int64_t height(const Ideal& a) {
  int64_t dim = dimension(a);
  if (dim == kMinusInf) return kPlusInf;  // unit ideal
  return a.ring()->nvars() - dim;
}

Ideal irrelevant_ideal(const Ring& ring) {
  std::vector<Poly> gens;
  for (int i = 0; i < ring->nvars(); ++i) gens.push_back(Poly::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

namespace {
void monomials_of_expsum(const Ring& ring, int k, int var, std::vector<int32_t>& cur,
                         std::vector<Poly>& out) {
  int n = ring->nvars();
  if (var == n - 1) {
    cur[var] = k;
    out.push_back(Poly::monomial(ring, make_monomial(*ring, cur), Coeff::one(ring->field)));
    cur[var] = 0;
    return;
  }
  for (int e = 0; e <= k; ++e) {
    cur[var] = e;
    monomials_of_expsum(ring, k - e, var + 1, cur, out);
  }
  cur[var] = 0;
}
}  // namespace

Ideal irrelevant_power(const Ring& ring, int k) {
  require_internal(k >= 0, "negative power of the irrelevant ideal");
  if (k == 0) return Ideal::unit(ring);
  std::vector<Poly> gens;
  std::vector<int32_t> cur(ring->vars.size(), 0);
  monomials_of_expsum(ring, k, 0, cur, gens);
  return Ideal(ring, std::move(gens));
}

}  // namespace grex
