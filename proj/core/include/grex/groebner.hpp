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

#ifndef GREX_GROEBNER_HPP
#define GREX_GROEBNER_HPP

#include "grex/module.hpp"

namespace grex {

/// Reduced Groebner basis: monic, autoreduced, sorted ascending by leading
/// monomial. Reduced bases are canonical, so equal ideals compare equal.
struct GroebnerBasis {
  Ring ring;
  std::vector<Poly> gens;
  GBStats stats;
};

/// Buchberger with normal selection and Gebauer-Moller pruning, computed by
/// the module engine on a rank-one free module. Works for inhomogeneous
/// input; homogeneous input is processed degree by degree as a consequence
/// of normal selection.
GroebnerBasis buchberger(const Ring& ring, const std::vector<Poly>& gens,
                         const GBOptions& opts = {});

/// Full deterministic reduction (first dividing basis element wins, leading
/// term outward). Idempotent and k-linear for a fixed basis.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis);
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

/// Exhaustive Buchberger criterion on the emitted basis (no pruning).
bool spair_certificate(const GroebnerBasis& gb);

/// First syzygies of homogeneous ideal generators: rows of the result are
/// vectors v with sum_i v_i * gens_i = 0, in R(-deg g_1)+...+R(-deg g_k).
SyzygyResult ideal_syzygies(const Ring& ring, const std::vector<Poly>& gens,
                            const GBOptions& opts = {});

}  // namespace grex

#endif
