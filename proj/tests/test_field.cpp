#include "doctest.h"

#include "grex/error.hpp"
#include "grex/field.hpp"
#include "grex/rng.hpp"

using namespace grex;

TEST_SUITE("field") {
  TEST_CASE("rational arithmetic is exact") {
    Field q = Field::rationals();
    Coeff a = Coeff::from_mpq(mpq_class(1, 3));
    Coeff b = Coeff::from_mpq(mpq_class(1, 6));
    CHECK((a + b) == Coeff::from_mpq(mpq_class(1, 2)));
    CHECK((a - a).is_zero());
    CHECK((a * Coeff::from_int(q, 3)).is_one());
    CHECK(a.inv() == Coeff::from_int(q, 3));
    CHECK((Coeff::from_int(q, -7) / Coeff::from_int(q, -7)).is_one());
    Coeff big = Coeff::from_mpq(mpq_class("123456789012345678901234567890/7"));
    CHECK((big - big).is_zero());
    CHECK((big / big).is_one());
  }

  TEST_CASE("prime field units invert") {
    Field f = Field::prime(32003);
    Rng rng(1);
    for (int k = 0; k < 200; ++k) {
      Coeff a = Coeff::random(f, rng, true);
      CHECK((a * a.inv()).is_one());
      CHECK((a + a.neg()).is_zero());
    }
    CHECK(Coeff::from_int(f, 32003).is_zero());
    CHECK(Coeff::from_int(f, -1) == Coeff::from_int(f, 32002));
  }

  TEST_CASE("small prime field tables") {
    Field f = Field::prime(7);
    for (long a = 0; a < 7; ++a)
      for (long b = 0; b < 7; ++b) {
        CHECK(Coeff::from_int(f, a) * Coeff::from_int(f, b) ==
              Coeff::from_int(f, (a * b) % 7));
        CHECK(Coeff::from_int(f, a) + Coeff::from_int(f, b) ==
              Coeff::from_int(f, (a + b) % 7));
      }
  }

  TEST_CASE("division by zero is rejected") {
    Field f = Field::prime(5);
    CHECK_THROWS_AS(Coeff::one(f) / Coeff::zero(f), Error);
    CHECK_THROWS_AS(Coeff::zero(Field::rationals()).inv(), Error);
  }

  TEST_CASE("characteristic validation") {
    CHECK_THROWS_AS(Field::prime(0), Error);
    CHECK_THROWS_AS(Field::prime(4), Error);
    CHECK_THROWS_AS(Field::prime(1u << 31), Error);
    CHECK(Field::prime(2147483629u).ch == 2147483629u);
    try {
      Field::prime(6);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == errc::input);
      CHECK(e.kind() == "BadCharacteristic");
    }
  }

  TEST_CASE("nonzero random draws are units") {
    Rng rng(9);
    for (int k = 0; k < 100; ++k) {
      CHECK(!Coeff::random(Field::prime(2), rng, true).is_zero());
      CHECK(!Coeff::random(Field::rationals(), rng, true).is_zero());
    }
  }
}
