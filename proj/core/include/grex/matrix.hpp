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

#ifndef GREX_MATRIX_HPP
#define GREX_MATRIX_HPP

#include <optional>
#include <vector>

#include "grex/poly.hpp"
#include "grex/rng.hpp"

namespace grex {

/// Dense matrix of field scalars with exact Gaussian elimination.
class FieldMat {
public:
  FieldMat(Field f, int rows, int cols)
      : field(f), rows(rows), cols(cols), a(static_cast<size_t>(rows) * cols, Coeff::zero(f)) {}

  static FieldMat identity(Field f, int n);
  static FieldMat random(Field f, int rows, int cols, Rng& rng);

  Coeff& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Coeff& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  FieldMat mul(const FieldMat& o) const;
  FieldMat transpose() const;
  Coeff det() const;  // square only
  std::optional<FieldMat> inverse() const;

  Field field;
  int rows, cols;
  std::vector<Coeff> a;
};

/// Dense matrix of polynomials; minors are computed by Laplace expansion
/// with memoization shared across all (row set, column set) subproblems.
class PolyMat {
public:
  PolyMat(Ring ring, int rows, int cols)
      : ring(std::move(ring)),
        rows(rows),
        cols(cols),
        a(static_cast<size_t>(rows) * cols, Poly(this->ring)) {}

  Poly& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Poly& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  PolyMat mul(const PolyMat& o) const;
  /// Left/right multiplication by field scalars lifted to constants.
  PolyMat mul_left(const FieldMat& u) const;
  PolyMat mul_right(const FieldMat& u) const;
  PolyMat transpose() const;

  Poly det() const;
  /// All t x t minors, rows and columns in lexicographic subset order.
  std::vector<Poly> minors(int t) const;

  Ring ring;
  int rows, cols;
  std::vector<Poly> a;
};

}  // namespace grex

#endif
