#include "doctest.h"

#include <string>
#include <vector>

#include "grex/error.hpp"
#include "grex/graded.hpp"
#include "grex/io.hpp"
#include "grex/pfaffian.hpp"
#include "helpers.hpp"

using namespace grex;

namespace {

AltMatrix conditioned_matrix(const Ring& r, int n, int s, uint64_t seed) {
  for (uint64_t k = 0; k < 20; ++k) {
    Rng rng(Rng::derive(seed, k));
    AltMatrix a = AltMatrix::random_linear(r, n, rng);
    if (height(pf_ideal(a, n - 1)) == 3 && check_conditions(a, s).ok) return a;
  }
  FAIL("no random matrix satisfied the height conditions");
  return AltMatrix(r, n);
}

}  // namespace

TEST_SUITE("pfaffian") {
  TEST_CASE("pfaffian squared equals the determinant") {
    Rng rng(411);
    Ring r = pring(32003, {"x", "y", "z"});
    for (int n : {2, 4, 6}) {
      AltMatrix a = AltMatrix::random_linear(r, n, rng);
      Poly pf = pfaffian(a);
      CHECK(pf * pf == a.to_poly_mat().det());
    }
  }

  TEST_CASE("pfaffian squared equals the determinant for mixed degree entries") {
    Ring r = qring({"x", "y"});
    AltMatrix a(r, 4);
    std::vector<std::string> entries = {"x + 1", "y^2", "3", "x*y - 2", "x^3 + y", "1/2*y"};
    int k = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) a.set_upper(i, j, pp(r, entries[k++]));
    CHECK(pfaffian(a) * pfaffian(a) == a.to_poly_mat().det());
  }

  TEST_CASE("pfaffian conventions for degenerate index sets") {
    Ring r = qring({"x", "y", "z"});
    Rng rng(412);
    AltMatrix a = AltMatrix::random_linear(r, 5, rng);
    CHECK(pfaffian(a, {}) == pp(r, "1"));
    CHECK(pfaffian(a, {0, 1, 2}).is_zero());
    CHECK(pfaffian(a).is_zero());
    CHECK(pfaffian(a, {1, 3}) == a.upper(1, 3));
  }

  TEST_CASE("signed maximal pfaffians annihilate the matrix") {
    Rng rng(413);
    for (int n : {3, 5, 7}) {
      for (int trial = 0; trial < 20; ++trial) {
        Ring r = pring(32003, {"x", "y", "z", "w"});
        AltMatrix a = AltMatrix::random_linear(r, n, rng);
        std::vector<Poly> g = signed_max_pfaffians(a);
        REQUIRE(static_cast<int>(g.size()) == n);
        for (int j = 0; j < n; ++j) {
          Poly acc(r);
          for (int i = 0; i < n; ++i) acc = acc + g[i] * a.entry(i, j);
          CHECK(acc.is_zero());
        }
      }
    }
  }

  TEST_CASE("generic five by five has a height three pfaffian ideal") {
    std::vector<std::string> vars;
    for (char c = 'a'; c <= 'j'; ++c) vars.push_back(std::string(1, c));
    Ring r = qring(vars);
    std::vector<std::vector<Poly>> rows(4);
    int k = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 5; ++j) rows[i].push_back(pp(r, vars[k++]));
    AltMatrix a = AltMatrix::from_upper(r, rows);
    CHECK(height(pf_ideal(a, 4)) == 3);
    CHECK(pf_ideal(a, 2).equals(irrelevant_ideal(r)));
  }

  TEST_CASE("pfaffian ideal level must be even") {
    Ring r = qring({"x", "y", "z"});
    Rng rng(414);
    AltMatrix a = AltMatrix::random_linear(r, 5, rng);
    CHECK_THROWS_WITH_AS(pf_ideal(a, 3), doctest::Contains("even"), Error);
    CHECK_THROWS_AS(pf_ideal(a, 0), Error);
    CHECK_THROWS_AS(pf_ideal(a, 6), Error);
  }

  TEST_CASE("height conditions agree with the minor height form") {
    Ring r = pring(32003, {"x", "y", "z"});
    for (uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(Rng::derive(991, seed));
      AltMatrix a = AltMatrix::random_linear(r, 5, rng);
      ConditionReport rep = check_conditions(a, 3);
      CHECK(rep.n == 5);
      CHECK(rep.s == 3);
      CHECK(rep.ok == check_conditions_minors(a, 3));
      for (const auto& row : rep.rows) {
        if (!rep.ok) break;
        CHECK(row[2] >= row[1]);
      }
    }
  }

  TEST_CASE("height conditions reject the zero matrix and even sizes") {
    Ring r = qring({"x", "y", "z"});
    AltMatrix zero(r, 5);
    CHECK(!check_conditions(zero, 3).ok);
    CHECK(!check_conditions_minors(zero, 3));
    Rng rng(415);
    AltMatrix even = AltMatrix::random_linear(r, 4, rng);
    CHECK_THROWS_WITH_AS(check_conditions(even, 2), doctest::Contains("odd"), Error);
  }

  TEST_CASE("bordered pfaffian generator counts") {
    CHECK(j_ideal_generator_count(3, 1) == 1);
    CHECK(j_ideal_generator_count(3, 3) == 4);
    CHECK(j_ideal_generator_count(2, 3) == 4);
    CHECK(j_ideal_generator_count(2, 0) == 1);
    CHECK(j_ideal_generator_count(3, 0) == 0);
    CHECK(j_ideal_generator_count(0, 2) == 2);
    CHECK(j_ideal_generator_count(4, 4) == 8);
  }

  TEST_CASE("single column border gives the full bordered pfaffian") {
    Ring r = qring({"a", "b", "c", "d", "e", "f"});
    AltMatrix x(r, 3);
    x.set_upper(0, 1, pp(r, "a"));
    x.set_upper(0, 2, pp(r, "b"));
    x.set_upper(1, 2, pp(r, "c"));
    PolyMat y(r, 3, 1);
    y.at(0, 0) = pp(r, "d");
    y.at(1, 0) = pp(r, "e");
    y.at(2, 0) = pp(r, "f");
    Ideal j = j_ideal(x, y);
    REQUIRE(j.gens().size() == 1);
    AltMatrix b = AltMatrix::from_upper(
        r, {{pp(r, "a"), pp(r, "b"), pp(r, "d")}, {pp(r, "c"), pp(r, "e")}, {pp(r, "f")}});
    CHECK(j.equals(Ideal(r, {pfaffian(b)})));
    CHECK(j.equals(Ideal(r, {pp(r, "a*f - b*e + c*d")})));
  }

  TEST_CASE("empty alternating block makes the bordered ideal unit") {
    Ring r = qring({"x", "y"});
    AltMatrix x(r, 0);
    PolyMat y(r, 0, 2);
    CHECK(j_ideal(x, y).is_unit());
  }

  TEST_CASE("generic recombination preserves the ideal") {
    Ring r = pring(32003, {"x", "y", "z"});
    Rng rng(416);
    AltMatrix a = AltMatrix::random_linear(r, 5, rng);
    std::vector<Poly> g = signed_max_pfaffians(a);
    Recombination rec = generic_generators(g, rng);
    REQUIRE(rec.gens.size() == g.size());
    CHECK(rec.coeffs.inverse().has_value());
    CHECK(Ideal(r, rec.gens).equals(Ideal(r, g)));
    for (size_t j = 0; j < rec.gens.size(); ++j) {
      Poly expect(r);
      for (size_t i = 0; i < g.size(); ++i)
        expect = expect + g[i].scale(rec.coeffs.at(static_cast<int>(i), static_cast<int>(j)));
      CHECK(rec.gens[j] == expect);
    }
  }

  TEST_CASE("recombination input validation") {
    Ring r = qring({"x", "y"});
    Rng rng(417);
    CHECK_THROWS_WITH_AS(generic_generators({pp(r, "x"), pp(r, "x^2")}, rng),
                         doctest::Contains("degrees"), Error);
    CHECK_THROWS_AS(generic_generators(std::vector<Poly>{}, rng), Error);
    Ideal i = mk_ideal(r, {"x^2", "x*y", "y^2"});
    CHECK_THROWS_WITH_AS(generic_generators(i, 2, rng), doctest::Contains("3"), Error);
    CHECK(generic_generators(i, 3, rng).gens.size() == 3);
  }

  TEST_CASE("residual intersection of a conditioned pfaffian ideal") {
    Ring r = pring(32003, {"x", "y", "z"});
    AltMatrix a = conditioned_matrix(r, 5, 3, 20260815);
    Ideal i = pf_ideal(a, 4);
    Rng rng(418);
    Recombination rec = generic_generators(signed_max_pfaffians(a), rng);
    std::vector<Poly> subset(rec.gens.begin(), rec.gens.begin() + 3);
    ResidualResult rr = residual_intersection(i, subset, 3);
    CHECK(rr.is_residual);
    CHECK(height(rr.k) >= 3);
    for (const Poly& f : subset) CHECK(rr.k.contains(f));
    CHECK_THROWS_WITH_AS(residual_intersection(i, subset, 4), doctest::Contains("size"), Error);
    std::vector<Poly> outside = {subset[0], subset[1], pp(r, "x")};
    CHECK_THROWS_WITH_AS(residual_intersection(i, outside, 3),
                         doctest::Contains("outside"), Error);
  }

  TEST_CASE("deformation raises the condition level and specializes back") {
    Ring r = pring(32003, {"x", "y", "z"});
    AltMatrix a = conditioned_matrix(r, 5, 3, 20260816);
    Rng rng(419);
    AltMatrix b = deform(a, 3, rng);
    CHECK(b.size() == 5);
    CHECK(b.ring()->nvars() == 4);
    CHECK(b.is_linear());
    CHECK(check_conditions(b, 4).ok);
    std::vector<Poly> back;
    for (int k = 0; k < 3; ++k) back.push_back(Poly::variable(r, k));
    back.push_back(Poly(r));
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        CHECK(substitute(b.upper(i, j), r, back) == a.upper(i, j));
  }

  TEST_CASE("presentation changes fix the top pfaffian ideal") {
    Ring r = pring(32003, {"x", "y", "z"});
    AltMatrix a = conditioned_matrix(r, 5, 3, 20260817);
    Field f = r->field;

    AltMatrix same = change_presentation(a, FieldMat::identity(f, 5));
    CHECK(same == a);

    FieldMat perm(f, 5, 5);
    std::vector<int> img = {1, 0, 3, 4, 2};
    for (int i = 0; i < 5; ++i) perm.at(i, img[i]) = Coeff::one(f);
    AltMatrix swapped = change_presentation(a, perm);
    CHECK(pf_ideal(swapped, 4).equals(pf_ideal(a, 4)));

    Rng rng(420);
    FieldMat u = FieldMat::random(f, 5, 5, rng);
    while (!u.inverse()) u = FieldMat::random(f, 5, 5, rng);
    AltMatrix moved = change_presentation(a, u);
    CHECK(moved.is_linear());
    CHECK(pf_ideal(moved, 4).equals(pf_ideal(a, 4)));

    FieldMat sing(f, 5, 5);
    CHECK_THROWS_WITH_AS(change_presentation(a, sing), doctest::Contains("singular"), Error);
  }

  TEST_CASE("alternating matrix construction validates shapes") {
    Ring r = qring({"x", "y"});
    CHECK_THROWS_WITH_AS(AltMatrix::from_upper(r, {{pp(r, "x")}, {pp(r, "y")}}),
                         doctest::Contains("row 0"), Error);
    AltMatrix a = AltMatrix::from_upper(r, {{pp(r, "x"), pp(r, "y")}, {pp(r, "x + y")}});
    CHECK(a.size() == 3);
    CHECK(a.entry(1, 0) == pp(r, "x").neg());
    CHECK(a.entry(2, 2).is_zero());
    CHECK(a.upper(0, 1) == pp(r, "x"));
  }
}
