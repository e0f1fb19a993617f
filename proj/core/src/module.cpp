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

#include "grex/module.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace grex {

namespace {
std::atomic<uint64_t> g_total_pairs{0};
std::atomic<uint64_t> g_total_zero{0};
std::atomic<int64_t> g_total_maxdeg{0};

void bump_totals(const GBStats& s) {
  g_total_pairs.fetch_add(s.pairs_processed, std::memory_order_relaxed);
  g_total_zero.fetch_add(s.reductions_to_zero, std::memory_order_relaxed);
  int64_t cur = g_total_maxdeg.load(std::memory_order_relaxed);
  while (cur < s.max_degree &&
         !g_total_maxdeg.compare_exchange_weak(cur, s.max_degree, std::memory_order_relaxed)) {
  }
}
}  // namespace

void GBStats::absorb(const GBStats& o) {
  pairs_processed += o.pairs_processed;
  pairs_discarded += o.pairs_discarded;
  reductions_to_zero += o.reductions_to_zero;
  max_degree = std::max(max_degree, o.max_degree);
  basis_size = std::max(basis_size, o.basis_size);
}

GBStats gb_totals_snapshot() {
  GBStats s;
  s.pairs_processed = g_total_pairs.load();
  s.reductions_to_zero = g_total_zero.load();
  s.max_degree = g_total_maxdeg.load();
  return s;
}

FreeMod make_free_module(Ring ring, std::vector<int64_t> twists, int elim_split) {
  require_internal(!twists.empty(), "free module needs positive rank");
  require_internal(elim_split >= 0 && elim_split <= static_cast<int>(twists.size()),
                   "bad elimination split");
  auto fm = std::make_shared<FreeModule>();
  fm->ring = std::move(ring);
  fm->twists = std::move(twists);
  fm->elim_split = elim_split;
  return fm;
}

bool same_free_module(const FreeMod& a, const FreeMod& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_ring(a->ring, b->ring) && a->twists == b->twists && a->elim_split == b->elim_split;
}

int modterm_cmp(const FreeModule& fm, const ModTerm& a, const ModTerm& b) {
  if (fm.elim_split > 0) {
    bool ea = a.pos < fm.elim_split, eb = b.pos < fm.elim_split;
    if (ea != eb) return ea ? 1 : -1;
  }
  int c = mono_cmp(*fm.ring, a.m, b.m);
  if (c != 0) return c;
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return 0;
}

ModVec ModVec::from_terms(FreeMod fm, std::vector<ModTerm> terms) {
  const FreeModule& f = *fm;
  std::sort(terms.begin(), terms.end(),
            [&](const ModTerm& a, const ModTerm& b) { return modterm_cmp(f, a, b) > 0; });
  ModVec v(std::move(fm));
  for (auto& t : terms) {
    if (t.c.is_zero()) continue;
    if (!v.t_.empty() && v.t_.back().pos == t.pos && v.t_.back().m == t.m) {
      v.t_.back().c = v.t_.back().c + t.c;
      if (v.t_.back().c.is_zero()) v.t_.pop_back();
    } else {
      v.t_.push_back(std::move(t));
    }
  }
  return v;
}

ModVec ModVec::from_polys(const FreeMod& fm, const std::vector<Poly>& comps) {
  require_internal(static_cast<int>(comps.size()) == fm->rank(), "component count mismatch");
  std::vector<ModTerm> terms;
  for (int i = 0; i < fm->rank(); ++i) {
    require_same_ring(comps[i].ring(), fm->ring);
    for (const auto& t : comps[i].terms()) terms.push_back(ModTerm{t.c, i, t.m});
  }
  return from_terms(fm, std::move(terms));
}

ModVec ModVec::basis_vector(const FreeMod& fm, int pos) {
  ModVec v(fm);
  v.t_.push_back(ModTerm{Coeff::one(fm->ring->field), pos, unit_monomial(*fm->ring)});
  return v;
}

const ModTerm& ModVec::lt() const {
  require_internal(!t_.empty(), "leading term of zero vector");
  return t_[0];
}

ModVec ModVec::merged(const ModVec& f, const ModVec& g, const Coeff* c, const Monomial* m,
                      bool negate) {
  require_internal(same_free_module(f.fm_, g.fm_), "free module mismatch");
  const FreeModule& fm = *f.fm_;
  ModVec out(f.fm_);
  out.t_.reserve(f.t_.size() + g.t_.size());
  size_t i = 0, j = 0;
  auto gterm = [&](size_t k) {
    ModTerm t = g.t_[k];
    if (m) t.m = mono_mul(*m, t.m);
    if (c) t.c = t.c * *c;
    if (negate) t.c = t.c.neg();
    return t;
  };
  while (i < f.t_.size() || j < g.t_.size()) {
    if (j == g.t_.size()) {
      out.t_.push_back(f.t_[i++]);
      continue;
    }
    ModTerm tg = gterm(j);
    int cmp = (i == f.t_.size()) ? -1 : modterm_cmp(fm, f.t_[i], tg);
    if (cmp > 0) {
      out.t_.push_back(f.t_[i++]);
    } else if (cmp < 0) {
      out.t_.push_back(std::move(tg));
      ++j;
    } else {
      Coeff s = f.t_[i].c + tg.c;
      if (!s.is_zero()) out.t_.push_back(ModTerm{std::move(s), f.t_[i].pos, f.t_[i].m});
      ++i;
      ++j;
    }
  }
  return out;
}

ModVec ModVec::operator+(const ModVec& o) const { return merged(*this, o, nullptr, nullptr, false); }
ModVec ModVec::operator-(const ModVec& o) const { return merged(*this, o, nullptr, nullptr, true); }

ModVec ModVec::minus_mul(const Coeff& c, const Monomial& m, const ModVec& g) const {
  return merged(*this, g, &c, &m, true);
}

ModVec ModVec::scale(const Coeff& c) const {
  if (c.is_zero()) return ModVec(fm_);
  ModVec v = *this;
  for (auto& t : v.t_) t.c = t.c * c;
  return v;
}

ModVec ModVec::mul_monomial(const Monomial& m) const {
  ModVec v = *this;
  for (auto& t : v.t_) t.m = mono_mul(t.m, m);
  return v;
}

ModVec ModVec::monic() const {
  require_internal(!is_zero(), "monic of zero vector");
  return scale(lt().c.inv());
}

bool ModVec::operator==(const ModVec& o) const {
  require_internal(same_free_module(fm_, o.fm_), "free module mismatch");
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].pos != o.t_[i].pos || !(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
  return true;
}

bool ModVec::is_homogeneous() const {
  if (t_.empty()) return true;
  int64_t d = t_[0].m.deg + fm_->twists[t_[0].pos];
  return std::all_of(t_.begin(), t_.end(),
                     [&](const ModTerm& t) { return t.m.deg + fm_->twists[t.pos] == d; });
}

int64_t ModVec::degree() const {
  int64_t d = kMinusInf;
  for (const auto& t : t_) d = std::max(d, t.m.deg + fm_->twists[t.pos]);
  return d;
}

Poly ModVec::component(int pos) const {
  std::vector<Term> terms;
  for (const auto& t : t_)
    if (t.pos == pos) terms.push_back(Term{t.c, t.m});
  return Poly::from_terms(fm_->ring, std::move(terms));
}

std::vector<Poly> ModVec::to_polys() const {
  std::vector<Poly> out;
  out.reserve(fm_->rank());
  for (int i = 0; i < fm_->rank(); ++i) out.push_back(component(i));
  return out;
}

ModVec module_normal_form(ModVec f, const std::vector<ModVec>& basis) {
  if (basis.empty() || f.is_zero()) return f;
  const FreeMod& fm = f.free_module();
  std::vector<ModTerm> remainder;
  while (!f.is_zero()) {
    const ModTerm& lt = f.lt();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      const ModTerm& gl = g.lt();
      if (gl.pos == lt.pos && mono_divides(gl.m, lt.m)) {
        f = f.minus_mul(lt.c / gl.c, mono_div(lt.m, gl.m), g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(f.lt());
      // chop the leading term off and keep reducing the tail
      ModVec head(fm);
      head = ModVec::from_terms(fm, {f.lt()});
      f = f - head;
    }
  }
  return ModVec::from_terms(fm, std::move(remainder));
}

namespace {

struct Pair {
  int i, j;  // i < j, same lead position
  Monomial lcm;
};

ModVec spair(const ModVec& a, const ModVec& b, const Monomial& lcm) {
  const ModTerm& la = a.lt();
  const ModTerm& lb = b.lt();
  ModVec left = a.scale(la.c.inv()).mul_monomial(mono_div(lcm, la.m));
  return left.minus_mul(lb.c.inv(), mono_div(lcm, lb.m), b);
}

// Gebauer-Moller pair update. The chain criterion is valid for modules; the
// product (coprime) criterion only for rank one.
void update_pairs(std::vector<Pair>& pairs, const std::vector<ModVec>& basis, int t,
                  const RingData& ring, bool allow_product, GBStats& stats) {
  const ModTerm& lt_new = basis[t].lt();
  struct Cand {
    Pair p;
    bool keep = true;
  };
  std::vector<Cand> cands;
  for (int i = 0; i < t; ++i) {
    if (basis[i].is_zero()) continue;
    const ModTerm& li = basis[i].lt();
    if (li.pos != lt_new.pos) continue;
    cands.push_back(Cand{Pair{i, t, mono_lcm(ring, li.m, lt_new.m)}, true});
  }
  // criterion M: drop a candidate whose lcm is a proper multiple of another's
  for (auto& a : cands) {
    for (auto& b : cands) {
      if (&a == &b || !b.keep || !a.keep) continue;
      if (!(b.p.lcm == a.p.lcm) && mono_divides(b.p.lcm, a.p.lcm)) {
        a.keep = false;
        ++stats.pairs_discarded;
      }
    }
  }
  // criterion F: among equal lcms keep the first
  for (size_t a = 0; a < cands.size(); ++a) {
    if (!cands[a].keep) continue;
    for (size_t b = a + 1; b < cands.size(); ++b) {
      if (cands[b].keep && cands[b].p.lcm == cands[a].p.lcm) {
        cands[b].keep = false;
        ++stats.pairs_discarded;
      }
    }
  }
  // product criterion (ideals only)
  if (allow_product) {
    for (auto& a : cands) {
      if (a.keep && mono_coprime(basis[a.p.i].lt().m, lt_new.m)) {
        a.keep = false;
        ++stats.pairs_discarded;
      }
    }
  }
  // chain criterion on old pairs
  std::vector<Pair> kept;
  kept.reserve(pairs.size());
  for (auto& p : pairs) {
    const Monomial& lij = p.lcm;
    bool drop = basis[p.i].lt().pos == lt_new.pos && mono_divides(lt_new.m, lij) &&
                !(mono_lcm(ring, basis[p.i].lt().m, lt_new.m) == lij) &&
                !(mono_lcm(ring, basis[p.j].lt().m, lt_new.m) == lij);
    if (drop) {
      ++stats.pairs_discarded;
    } else {
      kept.push_back(std::move(p));
    }
  }
  pairs = std::move(kept);
  for (auto& c : cands)
    if (c.keep) pairs.push_back(std::move(c.p));
}

// Deterministic normal selection: smallest (degree, order, i, j).
size_t select_pair(const std::vector<Pair>& pairs, const RingData& ring) {
  size_t best = 0;
  for (size_t k = 1; k < pairs.size(); ++k) {
    const Pair& a = pairs[k];
    const Pair& b = pairs[best];
    if (a.lcm.deg != b.lcm.deg) {
      if (a.lcm.deg < b.lcm.deg) best = k;
      continue;
    }
    int c = mono_cmp(ring, a.lcm, b.lcm);
    if (c != 0) {
      if (c < 0) best = k;
      continue;
    }
    if (std::tie(a.i, a.j) < std::tie(b.i, b.j)) best = k;
  }
  return best;
}

std::vector<ModVec> reduce_basis(const FreeMod& fm, std::vector<ModVec> basis) {
  const FreeModule& f = *fm;
  // minimal: drop elements whose lead term is divisible by another lead term
  std::sort(basis.begin(), basis.end(),
            [&](const ModVec& a, const ModVec& b) { return modterm_cmp(f, a.lt(), b.lt()) < 0; });
  std::vector<ModVec> minimal;
  for (auto& g : basis) {
    bool redundant = false;
    for (const auto& h : minimal) {
      if (h.lt().pos == g.lt().pos && mono_divides(h.lt().m, g.lt().m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(g));
  }
  // tail reduction against the others
  std::vector<ModVec> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModVec> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    ModVec r = module_normal_form(minimal[i], others);
    require_internal(!r.is_zero(), "minimal basis element reduced to zero");
    out.push_back(r.monic());
  }
  std::sort(out.begin(), out.end(),
            [&](const ModVec& a, const ModVec& b) { return modterm_cmp(f, a.lt(), b.lt()) < 0; });
  return out;
}

}  // namespace

ModuleGB module_buchberger(const FreeMod& fm, const std::vector<ModVec>& gens,
                           const GBOptions& opts) {
  const RingData& ring = *fm->ring;
  ModuleGB out;
  out.fm = fm;
  GBStats& stats = out.stats;

  std::vector<ModVec> basis;
  std::vector<Pair> pairs;
  bool rank1 = fm->rank() == 1 && fm->elim_split == 0;
  for (const auto& g : gens) {
    require_internal(same_free_module(g.free_module(), fm), "generator in wrong module");
    if (g.is_zero()) continue;
    basis.push_back(g.monic());
    update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1, ring, rank1, stats);
  }

  while (!pairs.empty()) {
    size_t k = select_pair(pairs, ring);
    Pair p = pairs[k];
    pairs.erase(pairs.begin() + static_cast<long>(k));
    if (opts.max_degree >= 0 && p.lcm.deg > opts.max_degree)
      fail_resource("ResourceExceeded",
                    "degree cap " + std::to_string(opts.max_degree) + " hit (basis size " +
                        std::to_string(basis.size()) + ", pairs processed " +
                        std::to_string(stats.pairs_processed) + ")");
    if (stats.pairs_processed >= opts.max_pairs)
      fail_resource("ResourceExceeded",
                    "pair cap " + std::to_string(opts.max_pairs) + " hit (basis size " +
                        std::to_string(basis.size()) + ")");
    ++stats.pairs_processed;
    stats.max_degree = std::max(stats.max_degree, p.lcm.deg);
    ModVec r = module_normal_form(spair(basis[p.i], basis[p.j], p.lcm), basis);
    if (r.is_zero()) {
      ++stats.reductions_to_zero;
      continue;
    }
    basis.push_back(r.monic());
    update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1, ring, rank1, stats);
  }

  out.gens = reduce_basis(fm, std::move(basis));
  stats.basis_size = out.gens.size();

  if (opts.self_check) {
    for (const auto& g : gens)
      require_internal(module_normal_form(g, out.gens).is_zero(),
                       "input generator does not reduce to zero against its own basis");
  }
  bump_totals(stats);
  return out;
}

bool module_spair_certificate(const ModuleGB& gb) {
  const RingData& ring = *gb.fm->ring;
  for (size_t i = 0; i < gb.gens.size(); ++i) {
    for (size_t j = i + 1; j < gb.gens.size(); ++j) {
      const ModTerm& a = gb.gens[i].lt();
      const ModTerm& b = gb.gens[j].lt();
      if (a.pos != b.pos) continue;
      Monomial lcm = mono_lcm(ring, a.m, b.m);
      if (!module_normal_form(spair(gb.gens[i], gb.gens[j], lcm), gb.gens).is_zero())
        return false;
    }
  }
  return true;
}

SyzygyResult syzygies(const FreeMod& fm, const std::vector<ModVec>& gens, const GBOptions& opts) {
  for (const auto& g : gens)
    if (!g.is_homogeneous())
      fail_input("HomogeneityRequired", "syzygies need homogeneous generators");
  int r = fm->rank();
  int k = static_cast<int>(gens.size());
  require_internal(k > 0, "syzygies of an empty generator list");
  std::vector<int64_t> twists = fm->twists;
  for (const auto& g : gens) twists.push_back(g.is_zero() ? 0 : g.degree());
  FreeMod graph = make_free_module(fm->ring, std::move(twists), r);

  std::vector<ModVec> graph_gens;
  for (int i = 0; i < k; ++i) {
    std::vector<ModTerm> terms;
    for (const auto& t : gens[i].terms()) terms.push_back(t);
    terms.push_back(ModTerm{Coeff::one(fm->ring->field), r + i, unit_monomial(*fm->ring)});
    graph_gens.push_back(ModVec::from_terms(graph, std::move(terms)));
  }
  ModuleGB gb = module_buchberger(graph, graph_gens, opts);

  SyzygyResult out;
  std::vector<int64_t> syz_twists;
  for (const auto& g : gens) syz_twists.push_back(g.is_zero() ? 0 : g.degree());
  out.fm = make_free_module(fm->ring, std::move(syz_twists), 0);
  for (const auto& v : gb.gens) {
    bool pure_tail = std::all_of(v.terms().begin(), v.terms().end(),
                                 [&](const ModTerm& t) { return t.pos >= r; });
    if (!pure_tail) continue;
    std::vector<ModTerm> terms;
    for (const auto& t : v.terms()) terms.push_back(ModTerm{t.c, t.pos - r, t.m});
    out.syz.push_back(ModVec::from_terms(out.fm, std::move(terms)));
  }
  return out;
}

}  // namespace grex
