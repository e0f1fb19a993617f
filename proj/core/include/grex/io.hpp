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

#ifndef GREX_IO_HPP
#define GREX_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "grex/poly.hpp"

namespace grex {

/// Canonical text form: terms in descending order, explicit '*' between
/// factors, '^' for powers, rational coefficients as n or n/d. Printing then
/// parsing is the identity.
std::string print_poly(const Poly& f);

/// Grammar: integer and rational literals, variable names, + - * / ^ ( ),
/// with '*' optional before a variable or '('. Errors carry byte positions.
Poly parse_poly(const Ring& ring, std::string_view text);

/// Header form: ring char=<0|p> vars=a,b,c weights=1,2,3 order=<grevlex|block:k>
/// (weights optional on input, always printed).
Ring parse_ring_header(std::string_view line);
std::string print_ring_header(const RingData& r);

/// Ideal file: ring header line, then one polynomial per line. Blank lines
/// and '#' comments are skipped.
struct IdealText {
  Ring ring;
  std::vector<Poly> polys;
};
IdealText parse_ideal_text(std::string_view text);
std::string print_ideal_text(const Ring& ring, const std::vector<Poly>& polys);

/// Alternating matrix file: ring header, a line "alt n=<k>", then k-1 lines
/// of comma-separated entries; line i holds the strictly upper entries
/// (i,i+1) ... (i,k). Commas cannot occur inside the polynomial grammar, so
/// the split is unambiguous.
struct AltText {
  Ring ring;
  int n = 0;
  std::vector<Poly> upper;  // row-major strict upper triangle
};
AltText parse_alt_text(std::string_view text);

}  // namespace grex

#endif
