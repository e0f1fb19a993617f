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

#include "grex/io.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace grex {

namespace {

// ---------------------------------------------------------------- printing

std::string coeff_abs_str(const Coeff& c) {
  std::string s = c.str();
  if (!s.empty() && s[0] == '-') s.erase(0, 1);
  return s;
}

bool coeff_is_negative(const Coeff& c) {
  std::string s = c.str();
  return !s.empty() && s[0] == '-';
}

std::string mono_str(const RingData& r, const Monomial& m) {
  std::string s;
  for (int i = 0; i < r.nvars(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += r.vars[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

// ----------------------------------------------------------------- parsing

struct Token {
  enum Kind { Int, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
  std::string text;
  size_t pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    size_t p = i_;
    if (i_ >= s_.size()) return {Token::End, "", p};
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      Token t{Token::Int, std::string(s_.substr(i_, j - i_)), p};
      i_ = j;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      Token t{Token::Name, std::string(s_.substr(i_, j - i_)), p};
      i_ = j;
      return t;
    }
    ++i_;
    switch (c) {
      case '+': return {Token::Plus, "+", p};
      case '-': return {Token::Minus, "-", p};
      case '*': return {Token::Star, "*", p};
      case '/': return {Token::Slash, "/", p};
      case '^': return {Token::Caret, "^", p};
      case '(': return {Token::LParen, "(", p};
      case ')': return {Token::RParen, ")", p};
      default:
        fail_input("ParseError", std::string("unexpected character '") + c + "' at position " +
                                     std::to_string(p));
    }
  }

private:
  std::string_view s_;
  size_t i_ = 0;
};

class PolyParser {
public:
  PolyParser(const Ring& ring, std::string_view text) : ring_(ring), lex_(text) { advance(); }

  Poly parse() {
    Poly p = expr();
    if (cur_.kind != Token::End)
      fail_input("ParseError", "trailing input at position " + std::to_string(cur_.pos));
    return p;
  }

private:
  void advance() { cur_ = lex_.next(); }

  [[noreturn]] void expected(const std::string& what) {
    fail_input("ParseError", "expected " + what + " at position " + std::to_string(cur_.pos));
  }

  Poly expr() {
    bool neg = false;
    if (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
      neg = cur_.kind == Token::Minus;
      advance();
    }
    Poly acc = term();
    if (neg) acc = acc.neg();
    while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
      bool sub = cur_.kind == Token::Minus;
      advance();
      Poly t = term();
      acc = sub ? acc - t : acc + t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (cur_.kind == Token::Star) {
        advance();
        acc = acc * factor();
      } else if (cur_.kind == Token::Name || cur_.kind == Token::LParen) {
        acc = acc * factor();  // implicit multiplication: 2x, 3(x+y), x y
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    if (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
      bool neg = cur_.kind == Token::Minus;
      advance();
      Poly f = factor();
      return neg ? f.neg() : f;
    }
    Poly b = base();
    if (cur_.kind == Token::Caret) {
      advance();
      if (cur_.kind == Token::Minus)
        fail_input("ParseError", "negative exponent at position " + std::to_string(cur_.pos));
      if (cur_.kind != Token::Int) expected("exponent");
      long k = std::stol(cur_.text);
      if (k > 100000)
        fail_input("ParseError", "exponent too large at position " + std::to_string(cur_.pos));
      advance();
      return b.pow(static_cast<uint32_t>(k));
    }
    return b;
  }

  Poly base() {
    if (cur_.kind == Token::Int) {
      mpq_class num(cur_.text);
      advance();
      if (cur_.kind == Token::Slash) {
        advance();
        if (cur_.kind != Token::Int) expected("denominator");
        mpq_class den(cur_.text);
        if (den == 0) fail_input("DivisionByZero", "zero denominator at position " +
                                                        std::to_string(cur_.pos));
        advance();
        return make_rational(num, den);
      }
      return make_rational(num, mpq_class(1));
    }
    if (cur_.kind == Token::Name) {
      for (int i = 0; i < ring_->nvars(); ++i) {
        if (ring_->vars[i] == cur_.text) {
          advance();
          return Poly::variable(ring_, i);
        }
      }
      fail_input("UnknownVariable",
                 "'" + cur_.text + "' at position " + std::to_string(cur_.pos));
    }
    if (cur_.kind == Token::LParen) {
      advance();
      Poly p = expr();
      if (cur_.kind != Token::RParen) expected("')'");
      advance();
      return p;
    }
    expected("number, variable or '('");
  }

  Poly make_rational(const mpq_class& num, const mpq_class& den) {
    if (ring_->field.is_rational())
      return Poly::constant(ring_, Coeff::from_mpq(num / den));
    // reduce both parts mod p; the denominator must stay a unit
    long n = mpz_fdiv_ui(num.get_num().get_mpz_t(), ring_->field.ch);
    long d = mpz_fdiv_ui(den.get_num().get_mpz_t(), ring_->field.ch);
    Coeff cn = Coeff::from_int(ring_->field, n);
    Coeff cd = Coeff::from_int(ring_->field, d);
    return Poly::constant(ring_, cn / cd);
  }

  Ring ring_;
  Lexer lex_;
  Token cur_;
};

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string trim(std::string s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  size_t b = s.find_last_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  for (auto& line : split(text, '\n')) {
    std::string l = line;
    size_t h = l.find('#');
    if (h != std::string::npos) l = l.substr(0, h);
    l = trim(l);
    if (!l.empty()) out.push_back(l);
  }
  return out;
}

}  // namespace

std::string print_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  const RingData& r = *f.ring();
  std::string s;
  for (size_t i = 0; i < f.terms().size(); ++i) {
    const Term& t = f.terms()[i];
    bool neg = coeff_is_negative(t.c);
    if (i == 0) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string cs = coeff_abs_str(t.c);
    std::string ms = mono_str(r, t.m);
    if (ms.empty()) {
      s += cs;
    } else if (cs == "1") {
      s += ms;
    } else {
      s += cs + "*" + ms;
    }
  }
  return s;
}

Poly parse_poly(const Ring& ring, std::string_view text) {
  return PolyParser(ring, text).parse();
}

Ring parse_ring_header(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string word;
  in >> word;
  if (word != "ring") fail_input("ParseError", "ring header must start with 'ring'");
  std::map<std::string, std::string> kv;
  while (in >> word) {
    size_t eq = word.find('=');
    if (eq == std::string::npos)
      fail_input("ParseError", "ring header expects key=value, got '" + word + "'");
    kv[word.substr(0, eq)] = word.substr(eq + 1);
  }
  if (!kv.count("char") || !kv.count("vars"))
    fail_input("ParseError", "ring header needs char= and vars=");
  long ch = std::stol(kv["char"]);
  Field f = ch == 0 ? Field::rationals() : Field::prime(static_cast<uint32_t>(ch));
  std::vector<std::string> vars = split(kv["vars"], ',');
  std::vector<int64_t> weights;
  if (kv.count("weights")) {
    for (auto& w : split(kv["weights"], ',')) weights.push_back(std::stoll(w));
  }
  OrderSpec order;
  if (kv.count("order")) {
    std::string o = kv["order"];
    if (o == "grevlex") {
      order.kind = OrderKind::grevlex;
    } else if (o.rfind("block:", 0) == 0) {
      order.kind = OrderKind::block;
      order.block = std::stoi(o.substr(6));
    } else {
      fail_input("ParseError", "unknown order '" + o + "'");
    }
  }
  return make_ring(f, std::move(vars), std::move(weights), order);
}

std::string print_ring_header(const RingData& r) {
  std::string s = "ring char=" + std::to_string(r.field.ch) + " vars=";
  for (int i = 0; i < r.nvars(); ++i) s += (i ? "," : "") + r.vars[i];
  s += " weights=";
  for (int i = 0; i < r.nvars(); ++i)
    s += (i ? "," : "") + std::to_string(r.weights[i]);
  s += " order=";
  if (r.order.kind == OrderKind::grevlex)
    s += "grevlex";
  else
    s += "block:" + std::to_string(r.order.block);
  return s;
}

IdealText parse_ideal_text(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) fail_input("ParseError", "empty input");
  IdealText out;
  out.ring = parse_ring_header(lines[0]);
  for (size_t i = 1; i < lines.size(); ++i) {
    for (auto& part : split(lines[i], ',')) {
      std::string p = trim(part);
      if (!p.empty()) out.polys.push_back(parse_poly(out.ring, p));
    }
  }
  return out;
}

std::string print_ideal_text(const Ring& ring, const std::vector<Poly>& polys) {
  std::string s = print_ring_header(*ring) + "\n";
  for (const auto& p : polys) s += print_poly(p) + "\n";
  return s;
}

AltText parse_alt_text(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.size() < 2) fail_input("ParseError", "matrix input needs a ring header and 'alt n=' line");
  AltText out;
  out.ring = parse_ring_header(lines[0]);
  std::istringstream in(lines[1]);
  std::string word;
  in >> word;
  if (word != "alt") fail_input("ParseError", "expected 'alt n=<size>' after ring header");
  in >> word;
  if (word.rfind("n=", 0) != 0) fail_input("ParseError", "expected 'alt n=<size>'");
  out.n = std::stoi(word.substr(2));
  if (out.n < 1) fail_input("ParseError", "matrix size must be positive");
  if (lines.size() != static_cast<size_t>(out.n) + 1)
    fail_input("ParseError", "expected " + std::to_string(out.n - 1) + " rows of entries");
  for (int i = 0; i < out.n - 1; ++i) {
    auto parts = split(lines[2 + i], ',');
    if (parts.size() != static_cast<size_t>(out.n - 1 - i))
      fail_input("ParseError", "row " + std::to_string(i + 1) + " must have " +
                                   std::to_string(out.n - 1 - i) + " entries");
    for (auto& part : parts) out.upper.push_back(parse_poly(out.ring, trim(part)));
  }
  return out;
}

}  // namespace grex
