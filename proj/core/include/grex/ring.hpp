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

#ifndef GREX_RING_HPP
#define GREX_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "grex/field.hpp"

namespace grex {

/// Exponent vector plus cached weighted degree. The degree cache makes the
/// hot comparison path O(1) in the common "degrees differ" case.
struct Monomial {
  std::vector<int32_t> e;
  int64_t deg = 0;

  bool is_unit() const {
    for (int32_t x : e)
      if (x != 0) return false;
    return true;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

/// Grevlex: weighted degree first, then reverse lexicographic tie break.
/// Block: the first `block` variables are compared first (their own weighted
/// grevlex), so any monomial touching the prefix beats any monomial free of
/// it; used for elimination.
enum class OrderKind { grevlex, block };

struct OrderSpec {
  OrderKind kind = OrderKind::grevlex;
  int block = 0;

  bool operator==(const OrderSpec&) const = default;
};

struct RingData {
  Field field;
  std::vector<std::string> vars;
  std::vector<int64_t> weights;
  OrderSpec order;

  int nvars() const { return static_cast<int>(vars.size()); }
};

using Ring = std::shared_ptr<const RingData>;

/// Validates: nonempty distinct identifier names, positive weights, sane
/// block size. Weighted degree is the first comparison key inside each block,
/// so the grading is order-compatible by construction.
Ring make_ring(Field field, std::vector<std::string> vars, std::vector<int64_t> weights,
               OrderSpec order = {});

/// Standard grading: all weights equal to 1.
bool is_standard_graded(const RingData& r);

/// Structural ring identity; distinct shared_ptrs with equal content are the
/// same ring for every operation in the library.
bool same_ring(const Ring& a, const Ring& b);
void require_same_ring(const Ring& a, const Ring& b);

/// Sum of the t largest variable weights (0 for t <= 0, capped at nvars).
int64_t theta(const RingData& r, int t);

Monomial unit_monomial(const RingData& r);
Monomial make_monomial(const RingData& r, std::vector<int32_t> exps);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, caller checks divisibility
Monomial mono_lcm(const RingData& r, const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

/// Total order: negative if a < b, 0 if equal, positive if a > b.
int mono_cmp(const RingData& r, const Monomial& a, const Monomial& b);

}  // namespace grex

#endif
