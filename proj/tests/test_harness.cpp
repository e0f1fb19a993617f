#include "doctest.h"

#include <string>
#include <vector>

#include "grex/error.hpp"
#include "grex/harness.hpp"
#include "grex/io.hpp"
#include "helpers.hpp"

using namespace grex;

TEST_SUITE("harness") {
  TEST_CASE("claim data is deterministic under a fixed seed") {
    Field f = Field::prime(32003);
    auto flatten = [](const Report& r) {
      std::string out = r.scenario + "#" + std::to_string(r.seed);
      for (const auto& [k, v] : r.params) out += "|" + k + "=" + v;
      for (const auto& ring : r.rings) out += "|" + ring;
      for (const Claim& c : r.claims)
        out += "|" + c.description + ":" + c.lhs + c.relation + c.rhs + ":" + c.verdict;
      return out;
    };
    CHECK(flatten(scenario_points_suite(91, f)) == flatten(scenario_points_suite(91, f)));
    std::string a = flatten(scenario_main10(3, 5, 2, 7, f, false));
    CHECK(a == flatten(scenario_main10(3, 5, 2, 7, f, false)));
  }

  TEST_CASE("json carries the schema keys in order") {
    Report r = scenario_monomial_curve({3, 4, 5}, Field::rationals());
    std::string j = r.to_json();
    size_t version = j.find("\"version\"");
    size_t scenario = j.find("\"scenario\"");
    size_t seed = j.find("\"seed\"");
    size_t claims = j.find("\"claims\"");
    size_t timings = j.find("\"timings_ms\"");
    REQUIRE(version != std::string::npos);
    REQUIRE(claims != std::string::npos);
    CHECK(version < scenario);
    CHECK(scenario < seed);
    CHECK(seed < claims);
    CHECK(claims < timings);
    CHECK(j.find("\"gb_stats\"") != std::string::npos);
  }

  TEST_CASE("claims carry printable values on both sides") {
    Report r = scenario_monomial_curve({3, 4, 5}, Field::rationals());
    CHECK(r.all_passed());
    REQUIRE(!r.claims.empty());
    for (const Claim& c : r.claims) {
      CHECK(!c.description.empty());
      CHECK(!c.lhs.empty());
      CHECK(!c.rhs.empty());
      CHECK(!c.relation.empty());
      bool known = c.verdict == "PASS" || c.verdict == "FAIL" || c.verdict == "SKIP";
      CHECK(known);
    }
  }

  TEST_CASE("hypothesis misses skip instead of failing") {
    Ring r = qring({"x", "y", "z"});
    Report rep = scenario_points(mk_ideal(r, {"x^2", "x*y", "y^2", "z^2"}));
    CHECK(rep.all_passed());
    CHECK(rep.fail_count() == 0);
    bool skipped = false;
    for (const Claim& c : rep.claims)
      if (c.verdict == "SKIP") skipped = true;
    CHECK(skipped);
  }

  TEST_CASE("certified instances pass without skips on the bound claims") {
    Ring r = qring({"x", "y", "z"});
    Report rep = scenario_points(mk_ideal(r, {"y^2 - x*z", "z^2 - x*y", "x^2 - y*z"}));
    CHECK(rep.all_passed());
    bool saw_bound = false;
    for (const Claim& c : rep.claims)
      if (c.relation == "<=") {
        CHECK(c.verdict == "PASS");
        saw_bound = true;
      }
    CHECK(saw_bound);
  }

  TEST_CASE("verdict bookkeeping") {
    Report r;
    r.scenario = "synthetic";
    r.claims.push_back({"a", "1", "2", "<=", "PASS", true, 1});
    r.claims.push_back({"b", "3", "3", "==", "PASS", false, 0});
    CHECK(r.all_passed());
    CHECK(r.fail_count() == 0);
    r.claims.push_back({"c", "5", "4", "<=", "FAIL", true, -1});
    r.claims.push_back({"d", "-", "-", "skipped", "SKIP", false, 0});
    CHECK(!r.all_passed());
    CHECK(r.fail_count() == 1);
    std::string text = r.to_text();
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(text.find("SKIP") != std::string::npos);
  }

  TEST_CASE("scenario registry resolves every published name") {
    Field f = Field::prime(32003);
    for (const std::string& name : scenario_names()) {
      Report r = run_named_scenario(name, 5, f);
      CHECK(r.scenario == name);
      CHECK(r.all_passed());
      CHECK(!r.claims.empty());
    }
    CHECK_THROWS_AS(run_named_scenario("no-such-scenario", 5, f), Error);
  }

  TEST_CASE("random monomial curve audit stays exact across fields") {
    Report q = scenario_monomial_curve_random(3, 1729, Field::rationals());
    Report p = scenario_monomial_curve_random(3, 1729, Field::prime(32003));
    CHECK(q.all_passed());
    CHECK(p.all_passed());
    REQUIRE(q.claims.size() == p.claims.size());
    for (size_t k = 0; k < q.claims.size(); ++k) {
      CHECK(q.claims[k].description == p.claims[k].description);
      CHECK(q.claims[k].lhs == p.claims[k].lhs);
      CHECK(q.claims[k].rhs == p.claims[k].rhs);
    }
  }
}
