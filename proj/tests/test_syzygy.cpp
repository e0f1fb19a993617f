#include "doctest.h"

#include <vector>

#include "grex/graded.hpp"
#include "grex/semigroup.hpp"
#include "helpers.hpp"

using namespace grex;

namespace {

bool is_zero_mat(const PolyMat& m) {
  for (const Poly& p : m.a)
    if (!p.is_zero()) return false;
  return true;
}

int64_t binom(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  int64_t r = 1;
  for (int64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_SUITE("syzygy") {
  TEST_CASE("the Koszul complex resolves the residue field") {
    for (int n = 2; n <= 4; ++n) {
      std::vector<std::string> vars;
      for (int i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i + 1));
      Ring r = qring(vars);
      FreeRes res = free_resolution(irrelevant_ideal(r));
      REQUIRE(res.length() == n);
      for (int i = 0; i <= n; ++i) {
        CHECK(static_cast<int64_t>(res.degs[i].size()) == binom(n, i));
        for (int64_t d : res.degs[i]) CHECK(d == i);
      }
    }
  }

  TEST_CASE("differentials compose to zero and avoid unit entries") {
    Ring r = qring({"x", "y", "z", "w"});
    Ideal tc = mk_ideal(r, {"x*z - y^2", "x*w - y*z", "y*w - z^2"});
    FreeRes res = free_resolution(tc);
    for (size_t i = 0; i + 1 < res.diffs.size(); ++i)
      CHECK(is_zero_mat(res.diffs[i].mul(res.diffs[i + 1])));
    for (const PolyMat& m : res.diffs)
      for (const Poly& e : m.a)
        if (!e.is_zero()) CHECK(e.min_degree() >= 1);
  }

  TEST_CASE("twisted cubic has the Hilbert-Burch resolution") {
    Ring r = qring({"x", "y", "z", "w"});
    Ideal tc = mk_ideal(r, {"x*z - y^2", "x*w - y*z", "y*w - z^2"});
    FreeRes res = free_resolution(tc);
    REQUIRE(res.length() == 2);
    CHECK(res.degs[0] == std::vector<int64_t>{0});
    CHECK(res.degs[1] == std::vector<int64_t>{2, 2, 2});
    CHECK(res.degs[2] == std::vector<int64_t>{3, 3});
    auto b = betti_table(res);
    CHECK(b[{0, 0}] == 1);
    CHECK(b[{1, 2}] == 3);
    CHECK(b[{2, 3}] == 2);
  }

  TEST_CASE("weighted semigroup curve resolution matches its oracle") {
    Ideal p = toric_ideal(NumericalSemigroup({3, 4, 5}), Field::rationals());
    FreeRes res = free_resolution(p);
    REQUIRE(res.length() == 2);
    CHECK(res.degs[1] == std::vector<int64_t>{8, 9, 10});
    CHECK(res.degs[2] == std::vector<int64_t>{13, 14});
    CHECK(proj_dim_quotient(p) == 2);
    CHECK(depth_quotient(p) == 1);
  }

  TEST_CASE("first syzygies of the twisted cubic") {
    Ring r = pring(32003, {"x", "y", "z", "w"});
    std::vector<Poly> gens = {pp(r, "x*z - y^2"), pp(r, "x*w - y*z"),
                              pp(r, "y*w - z^2")};
    SyzygyResult s = ideal_syzygies(r, gens);
    CHECK(s.syz.size() >= 2);
    for (const ModVec& v : s.syz) {
      CHECK(!v.is_zero());
      CHECK(v.is_homogeneous());
      Poly dot(r);
      for (size_t k = 0; k < gens.size(); ++k)
        dot = dot + v.component(static_cast<int>(k)) * gens[k];
      CHECK(dot.is_zero());
    }
    Ideal i(r, gens);
    FreeRes res = free_resolution(i);
    REQUIRE(res.length() >= 2);
    CHECK(res.degs[2].size() == 2);
  }

  TEST_CASE("betti numbers are independent of the generator presentation") {
    Ring r = qring({"x", "y", "z"});
    Ideal lean = mk_ideal(r, {"x^2", "x*y", "y^3"});
    Ideal fat = mk_ideal(r, {"x*y", "y^3", "x^2", "x^2 + x*y", "y*(x^2) + x*(x*y)"});
    CHECK(betti_table(free_resolution(lean)) == betti_table(free_resolution(fat)));
  }

  TEST_CASE("resolution length obeys the syzygy bound") {
    Ring r = qring({"x", "y", "z"});
    std::vector<Ideal> cases = {
        mk_ideal(r, {"x^2 + y*z", "x*y^2 - z^3"}),
        mk_ideal(r, {"x^3", "y^3", "z^3", "x*y*z"}),
        irrelevant_power(r, 2),
    };
    for (const Ideal& i : cases) {
      FreeRes res = free_resolution(i);
      CHECK(res.length() <= r->nvars());
      CHECK(proj_dim_quotient(i) + depth_quotient(i) == r->nvars());
    }
  }
}
