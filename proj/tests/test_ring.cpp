#include "doctest.h"

#include <vector>

#include "grex/error.hpp"
#include "grex/ring.hpp"
#include "grex/rng.hpp"

using namespace grex;

namespace {

Monomial random_mono(const RingData& r, Rng& rng, int max_exp) {
  std::vector<int32_t> e(r.nvars());
  for (auto& x : e) x = static_cast<int32_t>(rng.below(max_exp + 1));
  return make_monomial(r, e);
}

}  // namespace

TEST_SUITE("ring") {
  TEST_CASE("weighted degree is cached from the weights") {
    Ring r = make_ring(Field::rationals(), {"x", "y", "z"}, {3, 4, 5});
    Monomial m = make_monomial(*r, {2, 0, 1});
    CHECK(m.deg == 11);
    CHECK(unit_monomial(*r).deg == 0);
    CHECK(is_standard_graded(*r) == false);
    CHECK(theta(*r, 2) == 9);
    CHECK(theta(*r, 0) == 0);
    CHECK(theta(*r, 7) == 12);
  }

  TEST_CASE("grevlex is a multiplicative total order with minimal unit") {
    Ring r = make_ring(Field::rationals(), {"x", "y", "z"}, {1, 1, 1});
    Rng rng(4);
    Monomial one = unit_monomial(*r);
    for (int k = 0; k < 300; ++k) {
      Monomial a = random_mono(*r, rng, 4);
      Monomial b = random_mono(*r, rng, 4);
      Monomial c = random_mono(*r, rng, 4);
      int ab = mono_cmp(*r, a, b);
      CHECK(mono_cmp(*r, b, a) == -ab);
      CHECK((ab == 0) == (a == b));
      if (ab < 0) CHECK(mono_cmp(*r, mono_mul(a, c), mono_mul(b, c)) < 0);
      if (!a.is_unit()) CHECK(mono_cmp(*r, one, a) < 0);
      if (a.deg < b.deg) CHECK(mono_cmp(*r, a, b) < 0);
      int bc = mono_cmp(*r, b, c);
      if (ab < 0 && bc < 0) CHECK(mono_cmp(*r, a, c) < 0);
    }
  }

  TEST_CASE("grevlex tie break matches the textbook order in degree two") {
    Ring r = make_ring(Field::rationals(), {"x", "y", "z"}, {1, 1, 1});
    auto m = [&](int a, int b, int c) { return make_monomial(*r, {a, b, c}); };
    CHECK(mono_cmp(*r, m(2, 0, 0), m(1, 1, 0)) > 0);
    CHECK(mono_cmp(*r, m(1, 1, 0), m(0, 2, 0)) > 0);
    CHECK(mono_cmp(*r, m(0, 2, 0), m(1, 0, 1)) > 0);
    CHECK(mono_cmp(*r, m(1, 0, 1), m(0, 1, 1)) > 0);
    CHECK(mono_cmp(*r, m(0, 1, 1), m(0, 0, 2)) > 0);
  }

  TEST_CASE("block order puts every prefix-touching monomial first") {
    Ring r = make_ring(Field::rationals(), {"t", "x", "y"}, {1, 1, 1},
                       OrderSpec{OrderKind::block, 1});
    Rng rng(5);
    for (int k = 0; k < 200; ++k) {
      Monomial a = random_mono(*r, rng, 3);
      Monomial b = random_mono(*r, rng, 3);
      if (a.e[0] > 0 && b.e[0] == 0) CHECK(mono_cmp(*r, a, b) > 0);
    }
  }

  TEST_CASE("monomial lattice operations") {
    Ring r = make_ring(Field::rationals(), {"x", "y"}, {1, 1});
    Monomial a = make_monomial(*r, {3, 1});
    Monomial b = make_monomial(*r, {1, 2});
    CHECK(mono_lcm(*r, a, b) == make_monomial(*r, {3, 2}));
    CHECK(mono_divides(b, mono_lcm(*r, a, b)));
    CHECK(mono_div(mono_lcm(*r, a, b), a) == make_monomial(*r, {0, 1}));
    CHECK(!mono_coprime(a, b));
    CHECK(mono_coprime(make_monomial(*r, {2, 0}), make_monomial(*r, {0, 5})));
  }

  TEST_CASE("ring construction validates its data") {
    Field q = Field::rationals();
    CHECK_THROWS_AS(make_ring(q, {"x", "x"}, {1, 1}), Error);
    CHECK_THROWS_AS(make_ring(q, {"x"}, {0}), Error);
    CHECK_THROWS_AS(make_ring(q, {"x"}, {1, 1}), Error);
    CHECK_THROWS_AS(make_ring(q, {""}, {1}), Error);
    CHECK_THROWS_AS(make_ring(q, {"x"}, {1}, OrderSpec{OrderKind::block, 2}), Error);
    Ring a = make_ring(q, {"x", "y"}, {1, 1});
    Ring b = make_ring(q, {"x", "y"}, {1, 1});
    CHECK(same_ring(a, b));
    CHECK(!same_ring(a, make_ring(q, {"x", "y"}, {1, 2})));
  }
}
