#include "doctest.h"

#include <map>
#include <vector>

#include "grex/error.hpp"
#include "grex/graded.hpp"
#include "grex/semigroup.hpp"
#include "helpers.hpp"

using namespace grex;

namespace {

/// Alternating sum over the resolution: the Hilbert function of R/I at e
/// must equal sum_i (-1)^i sum_j #{monomials of degree e - degs[i][j]}.
void check_euler(const Ideal& i, int64_t lo, int64_t hi) {
  FreeRes res = free_resolution(i);
  std::vector<int64_t> values = hilbert_values(i, lo, hi);
  for (int64_t e = lo; e <= hi; ++e) {
    int64_t expect = 0;
    int sign = 1;
    for (const auto& level : res.degs) {
      for (int64_t d : level) expect += sign * count_monomials(i.ring(), e - d);
      sign = -sign;
    }
    CHECK(values[static_cast<size_t>(e - lo)] == expect);
  }
}

}  // namespace

TEST_SUITE("graded") {
  TEST_CASE("hilbert values of reference quotients") {
    Ring r = qring({"x", "y", "z"});
    CHECK(hilbert_values(irrelevant_power(r, 2), 0, 3) ==
          std::vector<int64_t>{1, 3, 0, 0});
    CHECK(hilbert_values(Ideal::zero(r), 0, 3) == std::vector<int64_t>{1, 3, 6, 10});
    Ideal p = toric_ideal(NumericalSemigroup({3, 4, 5}), Field::rationals());
    CHECK(hilbert_values(p, 0, 6) == std::vector<int64_t>{1, 0, 0, 1, 1, 1, 1});
    CHECK(count_monomials(r, 4) == 15);
    CHECK(static_cast<int64_t>(monomials_of_degree(r, 4).size()) == 15);
    CHECK(count_monomials(r, -1) == 0);
  }

  TEST_CASE("euler characteristic ties resolutions to hilbert values") {
    Ring r = qring({"x", "y", "z", "w"});
    check_euler(mk_ideal(r, {"x*z - y^2", "x*w - y*z", "y*w - z^2"}), 0, 9);
    check_euler(mk_ideal(r, {"x^2 + y^2", "z^3 - w^3"}), 0, 9);
    Ideal p = toric_ideal(NumericalSemigroup({3, 4, 5}), Field::rationals());
    check_euler(p, 0, 20);
    Ring s = qring({"x", "y", "z"});
    check_euler(irrelevant_power(s, 3), 0, 9);
  }

  TEST_CASE("minimal generator degrees match the first resolution level") {
    Ring r = qring({"x", "y", "z", "w"});
    std::vector<Ideal> cases = {
        mk_ideal(r, {"x*z - y^2", "x*w - y*z", "y*w - z^2"}),
        mk_ideal(r, {"x^2", "x*y", "y^2", "z^3 + w^3"}),
        mk_ideal(r, {"x", "y^2", "x*y", "y^2 + x*y"}),
    };
    for (const Ideal& i : cases) {
      std::map<int64_t, int64_t> mu = minimal_generator_degrees(i);
      FreeRes res = free_resolution(i);
      std::map<int64_t, int64_t> level1;
      for (int64_t d : res.degs[1]) ++level1[d];
      CHECK(mu == level1);
      std::vector<Poly> mingens = minimal_generators(i);
      int64_t total = 0;
      for (const auto& [d, c] : mu) total += c;
      CHECK(static_cast<int64_t>(mingens.size()) == total);
      CHECK(Ideal(i.ring(), mingens).equals(i));
    }
  }

  TEST_CASE("relative generator degrees of a subquotient") {
    Ring r = qring({"x", "y"});
    Ideal m = mk_ideal(r, {"x"});
    Ideal n = mk_ideal(r, {"x^2", "x*y"});
    std::map<int64_t, int64_t> mu = minimal_generator_degrees(m, n);
    REQUIRE(mu.size() == 1);
    CHECK(mu[1] == 1);
    CHECK(minimal_generator_degrees(m, m).empty());
  }

  TEST_CASE("degree conventions for the zero module") {
    Ring r = qring({"x", "y"});
    CHECK(top_generator_degree(Ideal::zero(r)) == kMinusInf);
    CHECK(initial_degree(Ideal::zero(r)) == kPlusInf);
    CHECK(top_generator_degree(Ideal::unit(r)) == 0);
    CHECK(initial_degree(mk_ideal(r, {"x^3", "y^5"})) == 3);
    CHECK(top_generator_degree(mk_ideal(r, {"x^3", "y^5"})) == 5);
  }

  TEST_CASE("auslander buchsbaum on ten Cohen-Macaulay quotients") {
    struct Case {
      Ring r;
      std::vector<std::string> gens;
    };
    Ring r2 = qring({"x", "y"});
    Ring r3 = qring({"x", "y", "z"});
    Ring r4 = qring({"x", "y", "z", "w"});
    std::vector<Case> cases = {
        {r2, {"x"}},
        {r2, {"x*y"}},
        {r2, {"x^2 + y^2"}},
        {r3, {"x", "y"}},
        {r3, {"x", "y", "z"}},
        {r3, {"x^2", "y^3"}},
        {r3, {"x^2 - y*z", "y^2 - x*z"}},
        {r4, {"x*z - y^2", "x*w - y*z", "y*w - z^2"}},
        {r4, {"x", "y", "z", "w"}},
        {r4, {"x^2 - y*w", "z^3"}},
    };
    for (const Case& c : cases) {
      Ideal i = mk_ideal(c.r, c.gens);
      int64_t d = c.r->nvars();
      CHECK(proj_dim_quotient(i) + depth_quotient(i) == d);
      CHECK(depth_quotient(i) == dimension(i));
    }
  }

  TEST_CASE("regularity and postulation on one dimensional quotients") {
    Ring r2 = qring({"x", "y"});
    Ideal line = mk_ideal(r2, {"x"});
    CHECK(regularity_quotient(line) == 0);
    CHECK(postulation_number(line) == -1);
    CHECK(a_invariant_cm1(line) == -1);
    Ring r3 = qring({"x", "y", "z"});
    Ideal det = mk_ideal(r3, {"y^2 - x*z", "z^2 - x*y", "x^2 - y*z"});
    CHECK(regularity_quotient(det) == 1);
    CHECK(postulation_number(det) == 0);
    CHECK(a_invariant_cm1(det) == 0);
    CHECK(postulation_number(irrelevant_power(r3, 2)) == 1);
    CHECK(regularity_quotient(irrelevant_power(r3, 2)) == 1);
  }

  TEST_CASE("regularity requires the standard grading") {
    Ideal p = toric_ideal(NumericalSemigroup({3, 4, 5}), Field::rationals());
    try {
      regularity_quotient(p);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == "StandardGradingRequired");
    }
  }

  TEST_CASE("symbolic square sandwich and preconditions") {
    Ring r = qring({"x", "y", "z"});
    Ideal det = mk_ideal(r, {"y^2 - x*z", "z^2 - x*y", "x^2 - y*z"});
    Ideal sym = symbolic_square(det);
    Ideal sq = power(det, 2);
    CHECK(sym.contains(sq));
    CHECK(det.contains(sym));
    CHECK(saturate(sym, irrelevant_ideal(r)).equals(sym));
    Ideal ci = mk_ideal(r, {"x^2 + y*z", "y^2 + x*z"});
    CHECK(symbolic_square(ci).equals(power(ci, 2)));
    CHECK_THROWS_AS(symbolic_square(irrelevant_ideal(r)), Error);
    Ring r2 = qring({"x", "y"});
    Ideal principal = mk_ideal(r2, {"x"});
    CHECK(symbolic_square(principal).equals(mk_ideal(r2, {"x^2"})));
  }

  TEST_CASE("free resolution rejects improper input") {
    Ring r = qring({"x", "y"});
    CHECK_THROWS_AS(free_resolution(Ideal::unit(r)), Error);
    CHECK_THROWS_AS(free_resolution(mk_ideal(r, {"x + 1"})), Error);
  }
}
