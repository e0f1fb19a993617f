#include "doctest.h"

#include "grex/error.hpp"
#include "grex/graded.hpp"
#include "grex/ideal.hpp"
#include "grex/matrix.hpp"
#include "helpers.hpp"

using namespace grex;

TEST_SUITE("idealops") {
  TEST_CASE("sum product power intersect on monomial ideals") {
    Ring r = qring({"x", "y"});
    Ideal ix = mk_ideal(r, {"x"});
    Ideal iy = mk_ideal(r, {"y"});
    CHECK(intersect(ix, iy).equals(mk_ideal(r, {"x*y"})));
    CHECK(sum(ix, iy).equals(irrelevant_ideal(r)));
    CHECK(product(ix, iy).equals(mk_ideal(r, {"x*y"})));
    Ideal m = irrelevant_ideal(r);
    CHECK(power(m, 2).equals(mk_ideal(r, {"x^2", "x*y", "y^2"})));
    CHECK(power(m, 2).equals(product(m, m)));
    CHECK(power(m, 0).is_unit());
    CHECK(irrelevant_power(r, 3).equals(power(m, 3)));
  }

  TEST_CASE("quotient conventions and correctness") {
    Ring r = qring({"x", "y", "z"});
    Ideal i = mk_ideal(r, {"x*y", "x*z"});
    CHECK(quotient(i, mk_ideal(r, {"x"})).equals(mk_ideal(r, {"y", "z"})));
    CHECK(quotient(i, i).is_unit());
    CHECK(quotient(mk_ideal(r, {"x"}), mk_ideal(r, {"y"})).equals(mk_ideal(r, {"x"})));
    Ideal q = quotient(mk_ideal(r, {"x^2"}), irrelevant_ideal(r));
    CHECK(q.equals(mk_ideal(r, {"x^2"})));
    CHECK(quotient(Ideal::zero(r), mk_ideal(r, {"x"})).is_zero());
  }

  TEST_CASE("saturation removes exactly the irrelevant torsion") {
    Ring r = qring({"x", "y", "z"});
    Ideal i = mk_ideal(r, {"x^2", "x*y", "x*z"});
    Ideal s = saturate(i, irrelevant_ideal(r));
    CHECK(s.equals(mk_ideal(r, {"x"})));
    CHECK(saturate(s, irrelevant_ideal(r)).equals(s));
    CHECK(saturate(irrelevant_power(r, 4), irrelevant_ideal(r)).is_unit());
    Ideal tc = mk_ideal(r, {"x*z - y^2"});
    CHECK(saturate(tc, irrelevant_ideal(r)).equals(tc));
  }

  TEST_CASE("saturation is insensitive to irrelevant multiples") {
    Ring r = qring({"x", "y", "z"});
    Ideal i = mk_ideal(r, {"x*z - y^2", "x^3 - y*z^2"});
    Ideal m = irrelevant_ideal(r);
    Ideal blurred = product(i, power(m, 2));
    CHECK(saturate(blurred, m).equals(saturate(i, m)));
  }

  TEST_CASE("membership and containment") {
    Ring r = qring({"x", "y", "z"});
    Ideal i = mk_ideal(r, {"x*z - y^2", "x^2 - y"});
    CHECK(i.contains(pp(r, "x*(x*z - y^2) - z*(x^2 - y)")));
    CHECK(!i.contains(pp(r, "x")));
    CHECK(saturate(i, irrelevant_ideal(r)).contains(i));
    CHECK(Ideal::unit(r).contains(pp(r, "x - 1")));
    CHECK(!Ideal::zero(r).contains(pp(r, "x")));
    CHECK(Ideal::zero(r).contains(Poly(r)));
  }

  TEST_CASE("elimination computes the implicit equation of the cuspidal cubic") {
    Ring r = make_ring(Field::rationals(), {"t", "x", "y"}, {1, 1, 1},
                       OrderSpec{OrderKind::block, 1});
    Ideal graph = mk_ideal(r, {"x - t^2", "y - t^3"});
    Ideal curve = eliminate(graph, {0});
    Ring target = qring({"x", "y"});
    REQUIRE(curve.gens().size() == 1);
    CHECK(print_poly(curve.gens()[0]) == "x^3 - y^2");
    CHECK(same_ring(curve.ring(), target));
  }

  TEST_CASE("dimension and height on reference ideals") {
    Ring r = qring({"x", "y", "z", "w"});
    Ideal tc = mk_ideal(r, {"x*z - y^2", "x*w - y*z", "y*w - z^2"});
    CHECK(dimension(tc) == 2);
    CHECK(height(tc) == 2);
    CHECK(dimension(irrelevant_ideal(r)) == 0);
    CHECK(height(irrelevant_ideal(r)) == 4);
    CHECK(dimension(Ideal::zero(r)) == 4);
    CHECK(height(Ideal::zero(r)) == 0);
    CHECK(dimension(Ideal::unit(r)) == kMinusInf);
    CHECK(height(Ideal::unit(r)) == kPlusInf);
    CHECK(dimension(mk_ideal(r, {"x"})) == 3);
  }

  TEST_CASE("linear substitution preserves dimension and ideal size") {
    Ring r = pring(32003, {"x", "y", "z", "w"});
    Ideal tc = mk_ideal(r, {"x*z - y^2", "x*w - y*z", "y*w - z^2"});
    Rng rng(12);
    for (int k = 0; k < 5; ++k) {
      FieldMat u = FieldMat::random(r->field, 4, 4, rng);
      if (!u.inverse()) continue;
      Ideal moved = substitute_linear(tc, u);
      CHECK(dimension(moved) == 2);
      CHECK(top_generator_degree(moved) == 2);
    }
  }

  TEST_CASE("exact division of polynomials") {
    Ring r = qring({"x", "y"});
    CHECK(exact_div(pp(r, "x^2*y^3"), pp(r, "x*y")) == pp(r, "x*y^2"));
    CHECK(exact_div(pp(r, "x^2 - y^2"), pp(r, "x - y")) == pp(r, "x + y"));
    CHECK_THROWS_AS(exact_div(pp(r, "x^2 + y"), pp(r, "y")), Error);
    CHECK_THROWS_AS(exact_div(pp(r, "x"), Poly(r)), Error);
  }

  TEST_CASE("homogeneity detection") {
    Ring r = make_ring(Field::rationals(), {"x", "y", "z"}, {3, 4, 5});
    CHECK(mk_ideal(r, {"y^2 - x*z", "x^3 - y*z"}).is_homogeneous());
    CHECK(!mk_ideal(r, {"x + y"}).is_homogeneous());
    CHECK(mk_ideal(qring({"x", "y"}), {"x + y"}).is_homogeneous());
  }
}
