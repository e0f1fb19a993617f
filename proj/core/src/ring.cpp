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

#include "grex/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace grex {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

int64_t weighted_deg(const std::vector<int64_t>& w, const std::vector<int32_t>& e) {
  int64_t d = 0;
  for (size_t i = 0; i < e.size(); ++i) d += w[i] * e[i];
  return d;
}

// Grevlex tie break on a slice [lo, hi): with equal weighted degree, the
// monomial with the larger exponent in the last differing variable is the
// smaller one.
int revlex_slice(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = hi - 1; i >= lo; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

int grevlex_slice(const RingData& r, const Monomial& a, const Monomial& b, int lo, int hi) {
  int64_t da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += r.weights[i] * a.e[i];
    db += r.weights[i] * b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  return revlex_slice(a, b, lo, hi);
}

}  // namespace

Ring make_ring(Field field, std::vector<std::string> vars, std::vector<int64_t> weights,
               OrderSpec order) {
  if (vars.empty()) fail_input("BadRing", "a ring needs at least one variable");
  if (weights.empty()) weights.assign(vars.size(), 1);
  if (weights.size() != vars.size())
    fail_input("BadRing", "variable/weight count mismatch");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_identifier(v)) fail_input("BadRing", "bad variable name '" + v + "'");
    if (!seen.insert(v).second) fail_input("BadRing", "duplicate variable '" + v + "'");
  }
  for (int64_t w : weights)
    if (w <= 0) fail_input("BadRing", "weights must be positive");
  if (order.kind == OrderKind::block &&
      (order.block <= 0 || order.block >= static_cast<int>(vars.size())))
    fail_input("BadRing", "block size must split the variables into two nonempty blocks");
  auto rd = std::make_shared<RingData>();
  rd->field = field;
  rd->vars = std::move(vars);
  rd->weights = std::move(weights);
  rd->order = order;
  return rd;
}

bool is_standard_graded(const RingData& r) {
  return std::all_of(r.weights.begin(), r.weights.end(), [](int64_t w) { return w == 1; });
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->field == b->field && a->vars == b->vars && a->weights == b->weights &&
         a->order == b->order;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) fail_input("RingMismatch", "operands live in different rings");
}

int64_t theta(const RingData& r, int t) {
  if (t <= 0) return 0;
  std::vector<int64_t> w = r.weights;
  std::sort(w.begin(), w.end(), std::greater<>());
  t = std::min<int>(t, static_cast<int>(w.size()));
  int64_t s = 0;
  for (int i = 0; i < t; ++i) s += w[i];
  return s;
}

Monomial unit_monomial(const RingData& r) {
  return Monomial{std::vector<int32_t>(r.vars.size(), 0), 0};
}

Monomial make_monomial(const RingData& r, std::vector<int32_t> exps) {
  if (exps.size() != r.vars.size()) fail_input("BadMonomial", "exponent count mismatch");
  for (int32_t x : exps)
    if (x < 0) fail_input("BadMonomial", "negative exponent");
  int64_t d = weighted_deg(r.weights, exps);
  return Monomial{std::move(exps), d};
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (size_t i = 0; i < m.e.size(); ++i) m.e[i] += b.e[i];
  m.deg += b.deg;
  return m;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial m = b;
  for (size_t i = 0; i < m.e.size(); ++i) m.e[i] -= a.e[i];
  m.deg -= a.deg;
  return m;
}

Monomial mono_lcm(const RingData& r, const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (size_t i = 0; i < m.e.size(); ++i) m.e[i] = std::max(a.e[i], b.e[i]);
  m.deg = weighted_deg(r.weights, m.e);
  return m;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

int mono_cmp(const RingData& r, const Monomial& a, const Monomial& b) {
  int n = r.nvars();
  if (r.order.kind == OrderKind::grevlex) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    return revlex_slice(a, b, 0, n);
  }
  int c = grevlex_slice(r, a, b, 0, r.order.block);
  if (c != 0) return c;
  return grevlex_slice(r, a, b, r.order.block, n);
}

}  // namespace grex
