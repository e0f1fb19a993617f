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

#include "grex/groebner.hpp"

namespace grex {

namespace {

FreeMod rank_one(const Ring& ring) { return make_free_module(ring, {0}, 0); }

ModVec wrap(const FreeMod& fm, const Poly& f) { return ModVec::from_polys(fm, {f}); }

Poly unwrap(const ModVec& v) { return v.component(0); }

}  // namespace

GroebnerBasis buchberger(const Ring& ring, const std::vector<Poly>& gens, const GBOptions& opts) {
  for (const auto& g : gens) require_same_ring(g.ring(), ring);
  FreeMod fm = rank_one(ring);
  std::vector<ModVec> wrapped;
  wrapped.reserve(gens.size());
  for (const auto& g : gens) wrapped.push_back(wrap(fm, g));
  ModuleGB mgb = module_buchberger(fm, wrapped, opts);
  GroebnerBasis out;
  out.ring = ring;
  out.stats = mgb.stats;
  out.gens.reserve(mgb.gens.size());
  for (const auto& v : mgb.gens) out.gens.push_back(unwrap(v));
  return out;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis) {
  if (basis.empty() || f.is_zero()) return f;
  require_same_ring(f.ring(), basis.front().ring());
  const Ring& ring = f.ring();
  std::vector<Term> remainder;
  Poly p = f;
  while (!p.is_zero()) {
    const Term& lt = p.lt();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (mono_divides(g.lm(), lt.m)) {
        p = p.minus_mul(lt.c / g.lc(), mono_div(lt.m, g.lm()), g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(lt);
      p = p - Poly::monomial(ring, lt.m, lt.c);
    }
  }
  return Poly::from_terms(ring, std::move(remainder));
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) { return normal_form(f, gb.gens); }

bool spair_certificate(const GroebnerBasis& gb) {
  const RingData& r = *gb.ring;
  for (size_t i = 0; i < gb.gens.size(); ++i) {
    for (size_t j = i + 1; j < gb.gens.size(); ++j) {
      const Poly& a = gb.gens[i];
      const Poly& b = gb.gens[j];
      Monomial lcm = mono_lcm(r, a.lm(), b.lm());
      Poly s = a.scale(a.lc().inv()).mul_monomial(mono_div(lcm, a.lm()));
      s = s.minus_mul(b.lc().inv(), mono_div(lcm, b.lm()), b);
      if (!normal_form(s, gb.gens).is_zero()) return false;
    }
  }
  return true;
}

SyzygyResult ideal_syzygies(const Ring& ring, const std::vector<Poly>& gens,
                            const GBOptions& opts) {
  FreeMod fm = rank_one(ring);
  std::vector<ModVec> wrapped;
  wrapped.reserve(gens.size());
  for (const auto& g : gens) {
    require_same_ring(g.ring(), ring);
    wrapped.push_back(wrap(fm, g));
  }
  return syzygies(fm, wrapped, opts);
}

}  // namespace grex
