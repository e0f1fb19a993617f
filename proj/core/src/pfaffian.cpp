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

#include "grex/pfaffian.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace grex {

namespace {

size_t upper_index(int n, int i, int j) {
  return static_cast<size_t>(i) * n - static_cast<size_t>(i) * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

AltMatrix::AltMatrix(Ring ring, int n)
    : ring_(std::move(ring)), n_(n), up_(static_cast<size_t>(n) * (n - 1) / 2, Poly(ring_)) {
  require_internal(n >= 0, "negative matrix size");
}

AltMatrix AltMatrix::from_upper(Ring ring, const std::vector<std::vector<Poly>>& rows) {
  int n = static_cast<int>(rows.size()) + 1;
  AltMatrix a(std::move(ring), n);
  for (int i = 0; i + 1 < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n - 1 - i)
      fail_input("BadShape", "row " + std::to_string(i) + " needs " + std::to_string(n - 1 - i) +
                                 " entries");
    for (int j = i + 1; j < n; ++j) a.set_upper(i, j, rows[i][j - i - 1]);
  }
  return a;
}

AltMatrix AltMatrix::random_linear(const Ring& ring, int n, Rng& rng) {
  AltMatrix a(ring, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Poly f(ring);
      for (int k = 0; k < ring->nvars(); ++k)
        f = f + Poly::variable(ring, k).scale(Coeff::random(ring->field, rng));
      a.set_upper(i, j, std::move(f));
    }
  return a;
}

const Poly& AltMatrix::upper(int i, int j) const {
  require_internal(0 <= i && i < j && j < n_, "upper index out of range");
  return up_[upper_index(n_, i, j)];
}

Poly AltMatrix::entry(int i, int j) const {
  if (i == j) return Poly(ring_);
  if (i < j) return upper(i, j);
  return upper(j, i).neg();
}

void AltMatrix::set_upper(int i, int j, Poly v) {
  require_internal(0 <= i && i < j && j < n_, "upper index out of range");
  require_same_ring(v.ring(), ring_);
  up_[upper_index(n_, i, j)] = std::move(v);
}

PolyMat AltMatrix::to_poly_mat() const {
  PolyMat m(ring_, n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(i, j) = entry(i, j);
  return m;
}

bool AltMatrix::is_linear() const {
  return std::all_of(up_.begin(), up_.end(), [](const Poly& f) {
    return f.is_zero() || (f.is_homogeneous() && f.degree() == 1);
  });
}

bool AltMatrix::operator==(const AltMatrix& o) const {
  return n_ == o.n_ && same_ring(ring_, o.ring_) && up_ == o.up_;
}

namespace {

/// Pfaffians of principal submatrices, memoized on the index-set bitmask.
class PfCache {
public:
  explicit PfCache(const AltMatrix& a) : a_(a) {}

  const Poly& get(uint64_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    Poly value(a_.ring());
    if (mask == 0) {
      value = Poly::from_int(a_.ring(), 1);
    } else if (__builtin_popcountll(mask) % 2 == 0) {
      int s0 = __builtin_ctzll(mask);
      uint64_t rest = mask & ~(uint64_t{1} << s0);
      bool plus = true;
      for (uint64_t bits = rest; bits; bits &= bits - 1) {
        int sj = __builtin_ctzll(bits);
        const Poly& e = a_.upper(s0, sj);
        if (!e.is_zero()) {
          const Poly& sub = get(rest & ~(uint64_t{1} << sj));
          Poly prod = e * sub;
          value = plus ? value + prod : value - prod;
        }
        plus = !plus;
      }
    }
    return memo_.emplace(mask, std::move(value)).first->second;
  }

private:
  const AltMatrix& a_;
  std::map<uint64_t, Poly> memo_;
};

uint64_t mask_of(const AltMatrix& a, const std::vector<int>& s) {
  uint64_t mask = 0;
  int prev = -1;
  for (int i : s) {
    if (i <= prev) fail_input("BadIndexSet", "indices must strictly increase");
    if (i < 0 || i >= a.size()) fail_input("BadIndexSet", "index out of range");
    prev = i;
    mask |= uint64_t{1} << i;
  }
  return mask;
}

void subsets_rec(int n, int t, int start, uint64_t mask, std::vector<uint64_t>& out) {
  if (t == 0) {
    out.push_back(mask);
    return;
  }
  for (int i = start; i + t <= n; ++i)
    subsets_rec(n, t - 1, i + 1, mask | (uint64_t{1} << i), out);
}

std::vector<uint64_t> subsets(int n, int t) {
  std::vector<uint64_t> out;
  subsets_rec(n, t, 0, 0, out);
  return out;
}

}  // namespace

Poly pfaffian(const AltMatrix& a, const std::vector<int>& s) {
  PfCache cache(a);
  return cache.get(mask_of(a, s));
}

Poly pfaffian(const AltMatrix& a) {
  std::vector<int> all(a.size());
  for (int i = 0; i < a.size(); ++i) all[i] = i;
  return pfaffian(a, all);
}

std::vector<Poly> signed_max_pfaffians(const AltMatrix& a) {
  int n = a.size();
  PfCache cache(a);
  uint64_t full = (n == 64) ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  std::vector<Poly> g;
  for (int i = 0; i < n; ++i) {
    Poly p = cache.get(full & ~(uint64_t{1} << i));
    g.push_back(i % 2 == 0 ? p : p.neg());
  }
  return g;
}

Ideal pf_ideal(const AltMatrix& a, int t) {
  if (t % 2 != 0) fail_input("EvenRequired", "Pfaffian ideals need even size");
  if (t < 2 || t > a.size()) fail_input("BadSize", "Pfaffian size out of range");
  PfCache cache(a);
  std::vector<Poly> gens;
  for (uint64_t mask : subsets(a.size(), t)) gens.push_back(cache.get(mask));
  return Ideal(a.ring(), std::move(gens));
}

Ideal minors_ideal(const PolyMat& m, int t) {
  if (t < 1 || t > std::min(m.rows, m.cols)) fail_input("BadSize", "minor size out of range");
  return Ideal(m.ring, m.minors(t));
}

ConditionReport check_conditions(const AltMatrix& a, int s) {
  int n = a.size();
  if (n % 2 == 0) fail_input("OddRequired", "condition check needs odd size");
  if (n < 3) fail_input("BadSize", "condition check needs size at least three");
  ConditionReport rep;
  rep.n = n;
  rep.s = s;
  rep.ht_top = height(pf_ideal(a, n - 1));
  rep.ok = true;
  auto check = [&](int i, int64_t required) {
    int64_t actual = height(pf_ideal(a, i));
    rep.rows.push_back({static_cast<int64_t>(i), required, actual});
    if (actual < required) rep.ok = false;
  };
  for (int i = n - s + 1; i <= n - 1; ++i)
    if (i >= 2 && i % 2 == 0) check(i, n - i + 1);
  if (n - s >= 2 && (n - s) % 2 == 0) check(n - s, s);
  return rep;
}

bool check_conditions_minors(const AltMatrix& a, int s) {
  int n = a.size();
  if (n % 2 == 0) fail_input("OddRequired", "condition check needs odd size");
  PolyMat m = a.to_poly_mat();
  for (int i = std::max(1, n - s); i <= n - 1; ++i)
    if (height(minors_ideal(m, i)) < n - i) return false;
  return true;
}

Ideal j_ideal(const AltMatrix& x, const PolyMat& y) {
  require_same_ring(x.ring(), y.ring);
  int p = x.size();
  int q = y.cols;
  require_internal(y.rows == p, "border must have one row per alternating row");
  AltMatrix b(x.ring(), p + q);
  for (int i = 0; i < p + q; ++i)
    for (int j = i + 1; j < p + q; ++j) {
      if (j < p)
        b.set_upper(i, j, x.upper(i, j));
      else if (i < p)
        b.set_upper(i, j, y.at(i, j - p));
    }
  uint64_t xmask = (uint64_t{1} << p) - 1;
  PfCache cache(b);
  std::vector<Poly> gens;
  for (int size = p % 2; size <= q; size += 2)
    for (uint64_t sub : subsets(q, size)) gens.push_back(cache.get(xmask | (sub << p)));
  return Ideal(x.ring(), std::move(gens));
}

int64_t j_ideal_generator_count(int p, int q) {
  // sum of (q choose s) over s congruent to p mod 2
  std::vector<int64_t> c(q + 1, 0);
  c[0] = 1;
  for (int row = 1; row <= q; ++row)
    for (int k = row; k >= 1; --k) c[k] += c[k - 1];
  int64_t total = 0;
  for (int s = p % 2; s <= q; s += 2) total += c[s];
  return total;
}

Recombination generic_generators(const std::vector<Poly>& gens, Rng& rng) {
  if (gens.empty()) fail_input("MixedDegrees", "no generators to recombine");
  for (const auto& g : gens)
    if (g.degree() != gens.front().degree())
      fail_input("MixedDegrees", "generators span several degrees");
  const Ring& ring = gens.front().ring();
  int n = static_cast<int>(gens.size());
  const Field& k = ring->field;
  Ideal original(ring, gens);
  for (int attempt = 0; attempt < 5; ++attempt) {
    FieldMat c = FieldMat::random(k, n, n, rng);
    if (!c.inverse()) continue;
    std::vector<Poly> f;
    for (int j = 0; j < n; ++j) {
      Poly acc(ring);
      for (int r = 0; r < n; ++r)
        if (!c.at(r, j).is_zero()) acc = acc + gens[r].scale(c.at(r, j));
      f.push_back(std::move(acc));
    }
    require_internal(Ideal(ring, f).equals(original), "recombination changed the ideal");
    return Recombination{std::move(f), std::move(c)};
  }
  fail_input("GenericityFailure", "no invertible coefficient matrix in 5 draws");
}

Recombination generic_generators(const Ideal& i, int count, Rng& rng) {
  std::vector<Poly> mingens = minimal_generators(i);
  if (count != static_cast<int>(mingens.size()))
    fail_input("WrongSize",
               "need exactly " + std::to_string(mingens.size()) + " combinations");
  return generic_generators(mingens, rng);
}

ResidualResult residual_intersection(const Ideal& i, const std::vector<Poly>& subset, int s) {
  if (static_cast<int>(subset.size()) != s)
    fail_input("WrongSize", "subset size must match the residual level");
  for (const auto& f : subset)
    if (!i.contains(f)) fail_input("ContainmentViolated", "subset element outside the ideal");
  Ideal a(i.ring(), subset);
  ResidualResult out{quotient(a, i)};
  out.is_residual = height(out.k) >= s;
  out.geometric = height(sum(i, out.k)) >= s + 1;
  return out;
}

namespace {

std::string fresh_var_name(const RingData& r, const std::string& base) {
  std::set<std::string> taken(r.vars.begin(), r.vars.end());
  if (!taken.count(base)) return base;
  for (int i = 0;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!taken.count(cand)) return cand;
  }
}

}  // namespace

AltMatrix deform(const AltMatrix& a, int s, Rng& rng) {
  int n = a.size();
  if (n % 2 == 0) fail_input("OddRequired", "deform needs odd size");
  const Ring& R = a.ring();
  if (!is_standard_graded(*R)) fail_input("StandardGradingRequired", "deform needs weights one");
  if (!a.is_linear()) fail_input("LinearRequired", "deform needs linear entries");
  int d = R->nvars();
  if (d >= (s + 2) * (s + 1) / 2)
    fail_input("PreconditionFailed", "deform needs nvars below (s+2 choose 2)");
  if (height(pf_ideal(a, n - 1)) != 3)
    fail_input("PreconditionFailed", "deform needs a height three top Pfaffian ideal");
  if (!check_conditions(a, s).ok)
    fail_input("PreconditionFailed", "deform needs the height conditions at the given level");

  std::vector<std::string> vars = R->vars;
  vars.push_back(fresh_var_name(*R, "x" + std::to_string(d + 1)));
  Ring E = make_ring(R->field, vars, std::vector<int64_t>(d + 1, 1), OrderSpec{});
  std::vector<int> up(d);
  for (int k = 0; k < d; ++k) up[k] = k;
  Poly xnew = Poly::variable(E, d);

  std::vector<Poly> back;
  for (int k = 0; k < d; ++k) back.push_back(Poly::variable(R, k));
  back.push_back(Poly(R));

  for (int attempt = 0; attempt < 5; ++attempt) {
    AltMatrix big(E, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        big.set_upper(i, j, map_vars(a.upper(i, j), E, up) +
                                xnew.scale(Coeff::random(R->field, rng)));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        require_internal(substitute(big.upper(i, j), R, back) == a.upper(i, j),
                         "deform does not specialize back");
    if (height(pf_ideal(big, n - 1)) == 3 && check_conditions(big, s + 1).ok) return big;
  }
  fail_input("GenericityFailure", "no deformation passed the level s+1 conditions in 5 draws");
}

AltMatrix change_presentation(const AltMatrix& a, const FieldMat& u) {
  int n = a.size();
  if (n % 2 == 0) fail_input("OddRequired", "presentation change needs odd size");
  require_internal(u.rows == n && u.cols == n && u.field == a.ring()->field,
                   "coefficient matrix shape mismatch");
  auto uinv = u.inverse();
  if (!uinv) fail_input("SingularChange", "coefficient matrix is singular");
  PolyMat t = a.to_poly_mat().mul_left(*uinv).mul_right(uinv->transpose());
  AltMatrix tilde(a.ring(), n);
  for (int i = 0; i < n; ++i) {
    require_internal(t.at(i, i).is_zero(), "conjugate lost the zero diagonal");
    for (int j = i + 1; j < n; ++j) {
      require_internal(t.at(i, j) == t.at(j, i).neg(), "conjugate lost antisymmetry");
      tilde.set_upper(i, j, t.at(i, j));
    }
  }

  std::vector<Poly> gt = signed_max_pfaffians(tilde);
  std::vector<Poly> g = signed_max_pfaffians(a);
  std::vector<Poly> target(n, Poly(a.ring()));
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < n; ++r)
      if (!u.at(r, j).is_zero()) target[j] = target[j] + g[r].scale(u.at(r, j));

  auto mismatch = [&](const std::string& why) {
    throw Error(errc::internal, "PresentationMismatch", why);
  };
  bool any = false;
  for (int j = 0; j < n; ++j) {
    if (gt[j].is_zero() != target[j].is_zero())
      mismatch("transformed Pfaffian vector has a different support");
    if (!gt[j].is_zero()) any = true;
    for (int l = j + 1; l < n; ++l)
      if (!(gt[j] * target[l] == gt[l] * target[j]))
        mismatch("transformed Pfaffian vector is not proportional to g u");
  }
  if (!any) mismatch("transformed Pfaffian vector vanished");
  if (!pf_ideal(tilde, n - 1).equals(pf_ideal(a, n - 1)))
    mismatch("top Pfaffian ideal changed under the presentation change");
  return tilde;
}

}  // namespace grex
