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

#include "grex/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace grex {

NumericalSemigroup::NumericalSemigroup(std::vector<int64_t> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) fail_input("NotNumerical", "no generators");
  for (int64_t g : gens_)
    if (g <= 0) fail_input("NotNumerical", "generators must be positive");
  std::sort(gens_.begin(), gens_.end());
  for (size_t k = 1; k < gens_.size(); ++k)
    if (gens_[k] == gens_[k - 1]) fail_input("NotMinimal", "repeated generator");
  int64_t g = 0;
  for (int64_t h : gens_) g = std::gcd(g, h);
  if (g != 1) fail_input("NotNumerical", "generators have gcd " + std::to_string(g));

  int64_t bound = gens_.front() * gens_.back() + gens_.back();
  if (bound > 100000000) fail_resource("SieveBudget", "membership sieve too large");
  member_.assign(bound + 1, 0);
  member_[0] = 1;
  for (int64_t n = 1; n <= bound; ++n)
    for (int64_t h : gens_)
      if (n >= h && member_[n - h]) {
        member_[n] = 1;
        break;
      }
  for (int64_t k = 0; k < gens_.back(); ++k)
    require_internal(member_[bound - k], "sieve bound misses the stable tail");
  frob_ = -1;
  for (int64_t n = bound; n >= 0; --n)
    if (!member_[n]) {
      frob_ = n;
      break;
    }

  for (int64_t h : gens_) {
    // minimal iff not a sum of two nonzero members
    for (int64_t a = gens_.front(); a + gens_.front() <= h; ++a)
      if (member_[a] && member_[h - a])
        fail_input("NotMinimal", std::to_string(h) + " is a sum of smaller members");
  }

  std::vector<int64_t> ap = apery(multiplicity());
  int64_t top = *std::max_element(ap.begin(), ap.end());
  require_internal(frob_ == top - multiplicity(), "largest gap disagrees with the Apery set");
}

bool NumericalSemigroup::contains(int64_t n) const {
  if (n < 0) return false;
  if (n < static_cast<int64_t>(member_.size())) return member_[n] != 0;
  return true;
}

std::vector<int64_t> NumericalSemigroup::apery(int64_t m) const {
  if (m <= 0 || !contains(m)) fail_input("NotMember", "Apery base must be a nonzero member");
  std::vector<int64_t> ap(m);
  for (int64_t r = 0; r < m; ++r) {
    int64_t w = r;
    while (!contains(w)) w += m;
    ap[r] = w;
  }
  return ap;
}

Ideal toric_ideal(const NumericalSemigroup& h, Field field) {
  const auto& gens = h.gens();
  int l = static_cast<int>(gens.size());
  static const char* kLetters[] = {"x", "y", "z", "u", "v", "w"};
  std::vector<std::string> vars{"t"};
  std::vector<int64_t> weights{1};
  for (int i = 0; i < l; ++i) {
    vars.push_back(l <= 6 ? kLetters[i] : "x" + std::to_string(i + 1));
    weights.push_back(gens[i]);
  }
  Ring T = make_ring(field, vars, weights, OrderSpec{});
  std::vector<Poly> binoms;
  for (int i = 0; i < l; ++i)
    binoms.push_back(Poly::variable(T, i + 1) -
                     Poly::variable(T, 0).pow(static_cast<uint32_t>(gens[i])));
  Ideal graph(T, std::move(binoms));
  Ideal result = eliminate(graph, {0});

  require_internal(height(result) == l - 1, "toric ideal has the wrong height");
  std::vector<std::string> tvar{"t"};
  Ring Rt = make_ring(field, tvar, {1}, OrderSpec{});
  std::vector<Poly> images;
  for (int i = 0; i < l; ++i)
    images.push_back(Poly::variable(Rt, 0).pow(static_cast<uint32_t>(gens[i])));
  for (const auto& f : result.gens()) {
    require_internal(f.terms().size() <= 2, "toric generator is not a binomial");
    require_internal(substitute(f, Rt, images).is_zero(),
                     "toric generator does not vanish on the curve");
  }
  return result;
}

}  // namespace grex
