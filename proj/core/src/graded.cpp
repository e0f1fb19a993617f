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

#include "grex/graded.hpp"

#include <algorithm>
#include <numeric>

namespace grex {

namespace {

constexpr int64_t kMonomialBudget = 5000000;

void enumerate_rec(const Ring& ring, int var, int64_t rem, std::vector<int32_t>& cur,
                   std::vector<Monomial>& out) {
  int n = ring->nvars();
  if (var == n - 1) {
    int64_t w = ring->weights[var];
    if (rem % w == 0) {
      cur[var] = static_cast<int32_t>(rem / w);
      out.push_back(make_monomial(*ring, cur));
      cur[var] = 0;
    }
    return;
  }
  int64_t w = ring->weights[var];
  for (int64_t e = 0; e * w <= rem; ++e) {
    cur[var] = static_cast<int32_t>(e);
    enumerate_rec(ring, var + 1, rem - e * w, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

int64_t count_monomials(const Ring& ring, int64_t d) {
  if (d < 0) return 0;
  std::vector<int64_t> ways(d + 1, 0);
  ways[0] = 1;
  for (int64_t w : ring->weights)
    for (int64_t e = w; e <= d; ++e) ways[e] += ways[e - w];
  return ways[d];
}

std::vector<Monomial> monomials_of_degree(const Ring& ring, int64_t d) {
  if (d < 0) return {};
  int64_t n = count_monomials(ring, d);
  if (n > kMonomialBudget)
    fail_resource("MonomialBudget", "degree " + std::to_string(d) + " has " +
                                        std::to_string(n) + " monomials");
  std::vector<Monomial> out;
  out.reserve(static_cast<size_t>(n));
  std::vector<int32_t> cur(ring->vars.size(), 0);
  enumerate_rec(ring, 0, d, cur, out);
  return out;
}

namespace {

int64_t count_standard(const Ring& ring, const std::vector<Monomial>& leads, int64_t e) {
  if (e < 0) return 0;
  int64_t cnt = 0;
  for (const auto& m : monomials_of_degree(ring, e)) {
    bool reducible = false;
    for (const auto& l : leads)
      if (mono_divides(l, m)) {
        reducible = true;
        break;
      }
    if (!reducible) ++cnt;
  }
  return cnt;
}

std::vector<Monomial> lead_monomials(const Ideal& i) {
  std::vector<Monomial> leads;
  for (const auto& g : i.gb().gens) leads.push_back(g.lm());
  return leads;
}

}  // namespace

std::vector<int64_t> hilbert_values(const Ideal& i, int64_t lo, int64_t hi) {
  if (lo > hi) fail_input("BadRange", "hilbert_values: lo > hi");
  auto leads = lead_monomials(i);
  std::vector<int64_t> out;
  for (int64_t e = lo; e <= hi; ++e) out.push_back(count_standard(i.ring(), leads, e));
  return out;
}

namespace {

/// Row echelon accumulator over a field. Rows keep their first nonzero entry
/// normalized to one and are keyed by that pivot column, so a single pass in
/// ascending pivot order fully reduces an incoming vector.
class RowSpace {
public:
  bool insert(std::vector<Coeff> v) {
    for (const auto& [p, row] : rows_) {
      if (v[p].is_zero()) continue;
      Coeff c = v[p];
      for (size_t j = p; j < v.size(); ++j) v[j] = v[j] - c * row[j];
    }
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      Coeff c = v[j];
      for (size_t k = j; k < v.size(); ++k) v[k] = v[k] / c;
      rows_.emplace(j, std::move(v));
      return true;
    }
    return false;
  }

private:
  std::map<size_t, std::vector<Coeff>> rows_;
};

using MonoIndex = std::map<std::vector<int32_t>, int>;

std::vector<Coeff> poly_row(const Poly& f, const MonoIndex& index, Field k) {
  std::vector<Coeff> v(index.size(), Coeff::zero(k));
  for (const auto& t : f.terms()) {
    auto it = index.find(t.m.e);
    require_internal(it != index.end(), "inhomogeneous row in graded piece");
    v[it->second] = t.c;
  }
  return v;
}

void require_homogeneous(const Ideal& i, const char* who) {
  if (!i.is_homogeneous())
    fail_input("HomogeneityRequired", std::string(who) + ": generators must be homogeneous");
}

}  // namespace

std::map<int64_t, int64_t> minimal_generator_degrees(const Ideal& m, const Ideal& n) {
  require_same_ring(m.ring(), n.ring());
  require_homogeneous(m, "minimal_generator_degrees");
  require_homogeneous(n, "minimal_generator_degrees");
  if (!m.contains(n))
    fail_input("ContainmentViolated", "minimal_generator_degrees: second ideal not inside first");
  std::map<int64_t, int64_t> mu;
  if (m.gens().empty()) return mu;
  const Ring& R = m.ring();
  int64_t lo = kPlusInf, hi = kMinusInf;
  for (const auto& g : m.gens()) {
    lo = std::min(lo, g.degree());
    hi = std::max(hi, g.degree());
  }
  for (int64_t e = lo; e <= hi; ++e) {
    MonoIndex index;
    for (const auto& mono : monomials_of_degree(R, e))
      index.emplace(mono.e, static_cast<int>(index.size()));
    RowSpace rs;
    for (const auto& g : n.gens()) {
      if (g.degree() > e) continue;
      for (const auto& mono : monomials_of_degree(R, e - g.degree()))
        rs.insert(poly_row(g.mul_monomial(mono), index, R->field));
    }
    for (const auto& g : m.gens()) {
      if (g.degree() >= e) continue;
      for (const auto& mono : monomials_of_degree(R, e - g.degree()))
        rs.insert(poly_row(g.mul_monomial(mono), index, R->field));
    }
    int64_t added = 0;
    for (const auto& g : m.gens())
      if (g.degree() == e && rs.insert(poly_row(g, index, R->field))) ++added;
    if (added > 0) mu[e] = added;
  }
  return mu;
}

std::map<int64_t, int64_t> minimal_generator_degrees(const Ideal& m) {
  return minimal_generator_degrees(m, Ideal::zero(m.ring()));
}

int64_t top_generator_degree(const Ideal& m) {
  auto mu = minimal_generator_degrees(m);
  return mu.empty() ? kMinusInf : mu.rbegin()->first;
}

int64_t initial_degree(const Ideal& m) {
  auto mu = minimal_generator_degrees(m);
  return mu.empty() ? kPlusInf : mu.begin()->first;
}

std::vector<Poly> minimal_generators(const Ideal& m) {
  require_homogeneous(m, "minimal_generators");
  std::vector<Poly> sorted = m.gens();
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  std::vector<Poly> kept;
  for (const auto& g : sorted) {
    if (kept.empty()) {
      kept.push_back(g);
      continue;
    }
    if (!Ideal(m.ring(), kept).contains(g)) kept.push_back(g);
  }
  return kept;
}

namespace {

/// Greedy minimal generating subset of a submodule, ascending degree.
std::vector<ModVec> minimalize_module(const FreeMod& fm, std::vector<ModVec> gens,
                                      const GBOptions& opts) {
  std::erase_if(gens, [](const ModVec& v) { return v.is_zero(); });
  std::stable_sort(gens.begin(), gens.end(),
                   [](const ModVec& a, const ModVec& b) { return a.degree() < b.degree(); });
  std::vector<ModVec> kept;
  for (const auto& v : gens) {
    if (kept.empty()) {
      kept.push_back(v);
      continue;
    }
    ModuleGB gb = module_buchberger(fm, kept, opts);
    if (!module_normal_form(v, gb.gens).is_zero()) kept.push_back(v);
  }
  return kept;
}

}  // namespace

FreeRes free_resolution(const Ideal& i, const GBOptions& opts) {
  require_homogeneous(i, "free_resolution");
  if (i.is_unit()) fail_input("ProperIdealRequired", "free_resolution: unit ideal");
  const Ring& R = i.ring();
  FreeRes res;
  res.ring = R;
  res.degs.push_back({0});
  std::vector<Poly> mingens = minimal_generators(i);
  if (mingens.empty()) return res;

  FreeMod fm = make_free_module(R, {0});
  std::vector<ModVec> cur;
  for (const auto& g : mingens) cur.push_back(ModVec::from_polys(fm, {g}));

  int guard = R->nvars() + 2;
  while (!cur.empty()) {
    require_internal(--guard >= 0, "resolution exceeds the syzygy theorem bound");
    std::vector<int64_t> degrees;
    PolyMat d(R, fm->rank(), static_cast<int>(cur.size()));
    for (size_t c = 0; c < cur.size(); ++c) {
      require_internal(cur[c].is_homogeneous(), "inhomogeneous syzygy");
      degrees.push_back(cur[c].degree());
      std::vector<Poly> col = cur[c].to_polys();
      for (int r = 0; r < fm->rank(); ++r) {
        require_internal(col[r].is_zero() || col[r].min_degree() >= 1,
                         "differential entry with a constant term");
        d.at(r, static_cast<int>(c)) = col[r];
      }
    }
    res.degs.push_back(std::move(degrees));
    res.diffs.push_back(std::move(d));

    SyzygyResult sy = syzygies(fm, cur, opts);
    cur = minimalize_module(sy.fm, std::move(sy.syz), opts);
    fm = sy.fm;
  }

  for (size_t k = 0; k + 1 < res.diffs.size(); ++k) {
    PolyMat comp = res.diffs[k].mul(res.diffs[k + 1]);
    for (const auto& entry : comp.a)
      require_internal(entry.is_zero(), "consecutive differentials do not compose to zero");
  }
  return res;
}

std::map<std::pair<int64_t, int64_t>, int64_t> betti_table(const FreeRes& res) {
  std::map<std::pair<int64_t, int64_t>, int64_t> b;
  for (size_t lvl = 0; lvl < res.degs.size(); ++lvl)
    for (int64_t d : res.degs[lvl]) ++b[{static_cast<int64_t>(lvl), d}];
  return b;
}

int64_t proj_dim_quotient(const Ideal& i) { return free_resolution(i).length(); }

int64_t depth_quotient(const Ideal& i) { return i.ring()->nvars() - proj_dim_quotient(i); }

int64_t regularity_quotient(const Ideal& i) {
  if (!is_standard_graded(*i.ring()))
    fail_input("StandardGradingRequired", "regularity needs a standard graded ring");
  FreeRes res = free_resolution(i);
  int64_t reg = kMinusInf;
  for (size_t lvl = 0; lvl < res.degs.size(); ++lvl)
    for (int64_t d : res.degs[lvl]) reg = std::max(reg, d - static_cast<int64_t>(lvl));
  return reg;
}

int64_t postulation_number(const Ideal& i) {
  int64_t dim = dimension(i);
  if (dim > 1)
    fail_input("DimensionRequired", "postulation number needs dim at most one");
  const Ring& R = i.ring();
  auto leads = lead_monomials(i);
  int64_t maxw = *std::max_element(R->weights.begin(), R->weights.end());
  int64_t window = 10 + 3 * maxw;
  std::vector<int64_t> hv;
  int64_t stable_from = -1;
  for (int64_t e = 0; e <= 600; ++e) {
    hv.push_back(count_standard(R, leads, e));
    if (static_cast<int64_t>(hv.size()) >= window) {
      int64_t s = static_cast<int64_t>(hv.size()) - window;
      bool flat = true;
      for (int64_t k = s; k < static_cast<int64_t>(hv.size()); ++k)
        if (hv[k] != hv[s]) {
          flat = false;
          break;
        }
      if (flat) {
        stable_from = s;
        break;
      }
    }
  }
  require_internal(stable_from >= 0, "Hilbert function did not stabilize");
  int64_t v = hv[stable_from];
  for (int64_t e = stable_from - 1; e >= 0; --e)
    if (hv[e] != v) return e;
  if (v != 0) return -1;
  return kMinusInf;
}

int64_t a_invariant_cm1(const Ideal& i) {
  if (dimension(i) != 1 || depth_quotient(i) != 1)
    fail_input("NotOneDimCM", "a-invariant path needs a one-dimensional Cohen-Macaulay quotient");
  return regularity_quotient(i) - 1;
}

Ideal symbolic_square(const Ideal& i) {
  require_homogeneous(i, "symbolic_square");
  if (dimension(i) != 1 || depth_quotient(i) != 1)
    fail_input("NotOneDimCM", "symbolic square needs a one-dimensional Cohen-Macaulay quotient");
  Ideal sq = power(i, 2);
  Ideal sat = saturate(sq, irrelevant_ideal(i.ring()));
  require_internal(sat.contains(sq), "symbolic square lost the square");
  require_internal(i.contains(sat), "symbolic square escapes the ideal");
  Ideal colon = quotient(sat, sq);
  require_internal(colon.is_unit() || height(colon) == i.ring()->nvars(),
                   "symbolic square differs from the square away from the irrelevant ideal");
  return sat;
}

}  // namespace grex
