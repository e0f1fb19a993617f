#include "doctest.h"

#include <algorithm>
#include <vector>

#include "grex/error.hpp"
#include "grex/graded.hpp"
#include "grex/io.hpp"
#include "grex/semigroup.hpp"
#include "helpers.hpp"

using namespace grex;

TEST_SUITE("semigroup") {
  TEST_CASE("frobenius numbers of reference semigroups") {
    CHECK(NumericalSemigroup({2, 3}).frobenius() == 1);
    CHECK(NumericalSemigroup({3, 4, 5}).frobenius() == 2);
    CHECK(NumericalSemigroup({6, 9, 20}).frobenius() == 43);
    CHECK(NumericalSemigroup({5, 7}).frobenius() == 23);
    CHECK(NumericalSemigroup({1}).frobenius() == -1);
  }

  TEST_CASE("two generator frobenius closed form") {
    std::vector<std::pair<int64_t, int64_t>> coprime = {{2, 5}, {3, 7}, {4, 9}, {5, 11}};
    for (auto [a, b] : coprime)
      CHECK(NumericalSemigroup({a, b}).frobenius() == a * b - a - b);
  }

  TEST_CASE("apery set determines the frobenius number") {
    std::vector<std::vector<int64_t>> gens = {{3, 4, 5}, {6, 9, 20}, {5, 7}, {4, 6, 7}};
    for (const auto& g : gens) {
      NumericalSemigroup h(g);
      std::vector<int64_t> ap = h.apery(h.multiplicity());
      CHECK(static_cast<int64_t>(ap.size()) == h.multiplicity());
      CHECK(ap.front() == 0);
      int64_t top = *std::max_element(ap.begin(), ap.end());
      CHECK(h.frobenius() == top - h.multiplicity());
      for (size_t k = 0; k < ap.size(); ++k) {
        CHECK(h.contains(ap[k]));
        CHECK(ap[k] % h.multiplicity() == static_cast<int64_t>(k));
        if (ap[k] >= h.multiplicity()) CHECK(!h.contains(ap[k] - h.multiplicity()));
      }
    }
  }

  TEST_CASE("membership sieve") {
    NumericalSemigroup h({3, 4, 5});
    CHECK(h.contains(0));
    CHECK(!h.contains(1));
    CHECK(!h.contains(2));
    CHECK(h.contains(3));
    CHECK(!h.contains(-3));
    for (int64_t n = h.frobenius() + 1; n < h.frobenius() + 20; ++n)
      CHECK(h.contains(n));
  }

  TEST_CASE("construction validates gcd and minimality") {
    CHECK_THROWS_AS(NumericalSemigroup({2, 4}), Error);
    CHECK_THROWS_AS(NumericalSemigroup({3, 4, 7}), Error);
    CHECK_THROWS_AS(NumericalSemigroup({}), Error);
    CHECK_THROWS_AS(NumericalSemigroup({0, 3}), Error);
    CHECK_THROWS_AS(NumericalSemigroup({3, -4}), Error);
    CHECK(NumericalSemigroup({4, 3}).gens() == std::vector<int64_t>{3, 4});
  }

  TEST_CASE("toric ideal of the monomial curve") {
    NumericalSemigroup h({3, 4, 5});
    for (Field f : {Field::rationals(), Field::prime(32003)}) {
      Ideal p = toric_ideal(h, f);
      CHECK(p.ring()->weights == std::vector<int64_t>{3, 4, 5});
      CHECK(height(p) == 2);
      CHECK(dimension(p) == 1);
      CHECK(p.is_homogeneous());
      for (const Poly& g : p.gens()) CHECK(g.nterms() == 2);
      Ring line = make_ring(f, {"s"}, {1});
      std::vector<Poly> images;
      for (int64_t e : h.gens())
        images.push_back(pp(line, "s").pow(static_cast<uint32_t>(e)));
      for (const Poly& g : p.gens())
        CHECK(substitute(g, line, images).is_zero());
    }
  }

  TEST_CASE("principal toric ideal of an embedding dimension two semigroup") {
    Ideal p = toric_ideal(NumericalSemigroup({2, 3}), Field::rationals());
    CHECK(height(p) == 1);
    REQUIRE(p.gens().size() == 1);
    CHECK(print_poly(p.gens()[0]) == "x^3 - y^2");
  }

  TEST_CASE("semigroup ring postulation equals the frobenius number") {
    for (const auto& g : std::vector<std::vector<int64_t>>{{3, 4, 5}, {4, 5, 6}, {5, 7}}) {
      NumericalSemigroup h(g);
      Ideal p = toric_ideal(h, Field::rationals());
      CHECK(postulation_number(p) == h.frobenius());
    }
  }
}
