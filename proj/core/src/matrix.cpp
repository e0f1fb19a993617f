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

#include "grex/matrix.hpp"

#include <map>

namespace grex {

FieldMat FieldMat::identity(Field f, int n) {
  FieldMat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Coeff::one(f);
  return m;
}

FieldMat FieldMat::random(Field f, int rows, int cols, Rng& rng) {
  FieldMat m(f, rows, cols);
  for (auto& c : m.a) c = Coeff::random(f, rng);
  return m;
}

FieldMat FieldMat::mul(const FieldMat& o) const {
  require_internal(cols == o.rows && field == o.field, "matrix shape mismatch");
  FieldMat r(field, rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

FieldMat FieldMat::transpose() const {
  FieldMat r(field, cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

namespace {

// Gauss-Jordan on [A | B]; returns false when A is singular.
bool solve_inplace(FieldMat& A, FieldMat& B) {
  int n = A.rows;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (!A.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return false;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(A.at(pivot, j), A.at(col, j));
      for (int j = 0; j < B.cols; ++j) std::swap(B.at(pivot, j), B.at(col, j));
    }
    Coeff inv = A.at(col, col).inv();
    for (int j = 0; j < n; ++j) A.at(col, j) = A.at(col, j) * inv;
    for (int j = 0; j < B.cols; ++j) B.at(col, j) = B.at(col, j) * inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || A.at(i, col).is_zero()) continue;
      Coeff f = A.at(i, col);
      for (int j = 0; j < n; ++j) A.at(i, j) = A.at(i, j) - f * A.at(col, j);
      for (int j = 0; j < B.cols; ++j) B.at(i, j) = B.at(i, j) - f * B.at(col, j);
    }
  }
  return true;
}

}  // namespace

Coeff FieldMat::det() const {
  require_internal(rows == cols, "determinant of non-square matrix");
  FieldMat A = *this;
  Coeff d = Coeff::one(field);
  int n = rows;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (!A.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Coeff::zero(field);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(A.at(pivot, j), A.at(col, j));
      d = d.neg();
    }
    d = d * A.at(col, col);
    Coeff inv = A.at(col, col).inv();
    for (int i = col + 1; i < n; ++i) {
      if (A.at(i, col).is_zero()) continue;
      Coeff f = A.at(i, col) * inv;
      for (int j = col; j < n; ++j) A.at(i, j) = A.at(i, j) - f * A.at(col, j);
    }
  }
  return d;
}

std::optional<FieldMat> FieldMat::inverse() const {
  require_internal(rows == cols, "inverse of non-square matrix");
  FieldMat A = *this;
  FieldMat B = identity(field, rows);
  if (!solve_inplace(A, B)) return std::nullopt;
  return B;
}

PolyMat PolyMat::mul(const PolyMat& o) const {
  require_internal(cols == o.rows, "matrix shape mismatch");
  require_same_ring(ring, o.ring);
  PolyMat r(ring, rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

PolyMat PolyMat::mul_left(const FieldMat& u) const {
  require_internal(u.cols == rows, "matrix shape mismatch");
  PolyMat r(ring, u.rows, cols);
  for (int i = 0; i < u.rows; ++i)
    for (int k = 0; k < rows; ++k) {
      if (u.at(i, k).is_zero()) continue;
      for (int j = 0; j < cols; ++j) r.at(i, j) = r.at(i, j) + at(k, j).scale(u.at(i, k));
    }
  return r;
}

PolyMat PolyMat::mul_right(const FieldMat& u) const {
  require_internal(cols == u.rows, "matrix shape mismatch");
  PolyMat r(ring, rows, u.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < u.cols; ++j) r.at(i, j) = r.at(i, j) + at(i, k).scale(u.at(k, j));
    }
  return r;
}

PolyMat PolyMat::transpose() const {
  PolyMat r(ring, cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

namespace {

// Laplace expansion along the first row of the selected submatrix, memoized
// on (row mask, column mask).
class MinorCalc {
public:
  explicit MinorCalc(const PolyMat& m) : m_(m) {}

  Poly det(uint32_t rowmask, uint32_t colmask) {
    int k = __builtin_popcount(rowmask);
    require_internal(k == __builtin_popcount(colmask), "non-square minor");
    if (k == 0) return Poly::from_int(m_.ring, 1);
    auto it = memo_.find({rowmask, colmask});
    if (it != memo_.end()) return it->second;
    int r = __builtin_ctz(rowmask);
    Poly acc(m_.ring);
    int sign = 1;
    uint32_t rest_rows = rowmask & (rowmask - 1);
    for (uint32_t cm = colmask; cm; cm &= cm - 1) {
      int c = __builtin_ctz(cm);
      const Poly& e = m_.at(r, c);
      if (!e.is_zero()) {
        Poly sub = det(rest_rows, colmask & ~(1u << c));
        Poly contrib = e * sub;
        acc = sign > 0 ? acc + contrib : acc - contrib;
      }
      sign = -sign;
    }
    memo_.emplace(std::make_pair(rowmask, colmask), acc);
    return acc;
  }

private:
  const PolyMat& m_;
  std::map<std::pair<uint32_t, uint32_t>, Poly> memo_;
};

void subsets_of_size(int n, int k, uint32_t cur, int next, std::vector<uint32_t>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = next; i <= n - k; ++i) subsets_of_size(n, k - 1, cur | (1u << i), i + 1, out);
}

}  // namespace

Poly PolyMat::det() const {
  require_internal(rows == cols, "determinant of non-square matrix");
  MinorCalc calc(*this);
  return calc.det((1u << rows) - 1, (1u << cols) - 1);
}

std::vector<Poly> PolyMat::minors(int t) const {
  require_internal(t >= 0, "negative minor size");
  std::vector<Poly> out;
  if (t > rows || t > cols) return out;
  if (t == 0) {
    out.push_back(Poly::from_int(ring, 1));
    return out;
  }
  std::vector<uint32_t> rsets, csets;
  subsets_of_size(rows, t, 0, 0, rsets);
  subsets_of_size(cols, t, 0, 0, csets);
  MinorCalc calc(*this);
  for (uint32_t rm : rsets)
    for (uint32_t cm : csets) out.push_back(calc.det(rm, cm));
  return out;
}

}  // namespace grex
