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

#ifndef GREX_MODULE_HPP
#define GREX_MODULE_HPP

#include <memory>
#include <vector>

#include "grex/poly.hpp"

namespace grex {

/// Graded free module R(-t_1) + ... + R(-t_r). When elim_split > 0 the
/// positions below the split dominate every position at or above it, which
/// turns Buchberger into an elimination computation on positions (used for
/// syzygies).
struct FreeModule {
  Ring ring;
  std::vector<int64_t> twists;
  int elim_split = 0;

  int rank() const { return static_cast<int>(twists.size()); }
};

using FreeMod = std::shared_ptr<const FreeModule>;

FreeMod make_free_module(Ring ring, std::vector<int64_t> twists, int elim_split = 0);
bool same_free_module(const FreeMod& a, const FreeMod& b);

struct ModTerm {
  Coeff c;
  int pos;
  Monomial m;
};

/// Term-over-position order: position block first (when elim_split is set),
/// then the ring order on monomials, then lower position wins. For rank one
/// this is exactly the ring order, so elimination ring orders pass through.
/// Twists carry the grading; they do not influence comparisons.
int modterm_cmp(const FreeModule& fm, const ModTerm& a, const ModTerm& b);

/// Element of a free module: descending sorted term list, no zeros.
class ModVec {
public:
  explicit ModVec(FreeMod fm) : fm_(std::move(fm)) {}

  static ModVec from_terms(FreeMod fm, std::vector<ModTerm> terms);
  /// Column vector (one polynomial per position).
  static ModVec from_polys(const FreeMod& fm, const std::vector<Poly>& comps);
  static ModVec basis_vector(const FreeMod& fm, int pos);

  const FreeMod& free_module() const { return fm_; }
  const std::vector<ModTerm>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  const ModTerm& lt() const;

  ModVec operator+(const ModVec& o) const;
  ModVec operator-(const ModVec& o) const;
  ModVec scale(const Coeff& c) const;
  ModVec mul_monomial(const Monomial& m) const;
  /// this - c * m * g
  ModVec minus_mul(const Coeff& c, const Monomial& m, const ModVec& g) const;
  ModVec monic() const;
  bool operator==(const ModVec& o) const;

  /// Homogeneous w.r.t. twisted degree (deg m + twist[pos]).
  bool is_homogeneous() const;
  int64_t degree() const;  // max twisted degree, kMinusInf for 0

  Poly component(int pos) const;
  std::vector<Poly> to_polys() const;

private:
  static ModVec merged(const ModVec& f, const ModVec& g, const Coeff* c, const Monomial* m,
                       bool negate);

  FreeMod fm_;
  std::vector<ModTerm> t_;
};

struct GBOptions {
  int64_t max_degree = -1;       // throw ResourceExceeded past this lcm degree (-1: off)
  uint64_t max_pairs = 2000000;  // throw ResourceExceeded past this many S-pairs
  bool self_check = true;        // verify each input reduces to zero at the end
};

struct GBStats {
  uint64_t pairs_processed = 0;
  uint64_t pairs_discarded = 0;
  uint64_t reductions_to_zero = 0;
  int64_t max_degree = 0;
  uint64_t basis_size = 0;

  void absorb(const GBStats& o);
};

/// Process-wide monotone counters so harness reports can include trace
/// totals without threading a sink through every call.
GBStats gb_totals_snapshot();

struct ModuleGB {
  FreeMod fm;
  std::vector<ModVec> gens;  // reduced: minimal, monic, tail-reduced, sorted by lead term
  GBStats stats;
};

ModuleGB module_buchberger(const FreeMod& fm, const std::vector<ModVec>& gens,
                           const GBOptions& opts = {});

/// Full reduction, deterministic (first reducer in basis order wins).
ModVec module_normal_form(ModVec f, const std::vector<ModVec>& basis);

/// Buchberger criterion checked exhaustively (no pruning): every S-vector of
/// basis elements with matching lead position reduces to zero.
bool module_spair_certificate(const ModuleGB& gb);

/// Generators of the first syzygy module of `gens` (elements of fm), via a
/// Groebner basis of the graph submodule under a position-elimination order.
/// Requires homogeneous input (HomogeneityRequired otherwise). The result
/// lives in a free module of rank = #gens twisted by their degrees.
struct SyzygyResult {
  FreeMod fm;  // rank = #gens, twists = degrees of gens
  std::vector<ModVec> syz;
};
SyzygyResult syzygies(const FreeMod& fm, const std::vector<ModVec>& gens,
                      const GBOptions& opts = {});

}  // namespace grex

#endif
