#include <catch2/catch_amalgamated.hpp>

#include "actwb/act.hpp"
#include "actwb/enumerate.hpp"
#include "support.hpp"

using namespace actwb;
using testsupport::rz_pair;

TEST_CASE("a monoid acting on itself is a valid act") {
  Act s = self_act(rz_pair());
  REQUIRE(s.size == 3);
  REQUIRE(validate_act(rz_pair(), {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}).action == s.action);
}

TEST_CASE("the empty act is accepted") {
  Act a = validate_act(rz_pair(), {{}, {}, {}});
  REQUIRE(a.size == 0);
}

TEST_CASE("the three-point act with two fixed points validates") {
  Act a = testsupport::pqx_act();
  REQUIRE(a.act(1, 2) == 0);  // a*x = p
  REQUIRE(a.act(2, 2) == 1);  // b*x = q
}

TEST_CASE("act validation reports the broken law") {
  try {
    validate_act(rz_pair(), {{1, 0}, {0, 1}, {0, 1}});
    FAIL("expected UnitLawFails");
  } catch (const WorkbenchError& e) {
    REQUIRE(e.code() == Errc::unit_law);
  }
  try {
    // unit row fine, but 1 applied twice disagrees with (1*1) applied once
    validate_act(testsupport::catalog_monoid("z2"), {{0, 1}, {1, 1}});
    FAIL("expected AssociativityFails");
  } catch (const WorkbenchError& e) {
    REQUIRE(e.code() == Errc::act_associativity);
  }
}

TEST_CASE("generated subacts") {
  Act s = self_act(rz_pair());
  CHECK(generated_subact(s, {}).empty());
  CHECK(generated_subact(s, {1}) == std::vector<int>{1});
  CHECK(generated_subact(s, {0}) == std::vector<int>{0, 1, 2});
  Act two = coproduct(s, s).act;
  CHECK(generated_subact(two, {1}) == std::vector<int>{1});  // a in the first copy
  std::vector<int> all(two.size);
  std::iota(all.begin(), all.end(), 0);
  CHECK(generated_subact(two, all) == all);
}

TEST_CASE("generated subact is extensive, monotone, idempotent") {
  Act a = coproduct(self_act(rz_pair()), testsupport::pqx_act()).act;
  for (unsigned mask = 0; mask < (1u << a.size); mask += 3) {
    std::vector<int> xs;
    for (int x = 0; x < a.size; ++x)
      if (mask >> x & 1) xs.push_back(x);
    auto sx = generated_subact(a, xs);
    CHECK(subset_of(xs, sx));
    CHECK(generated_subact(a, sx) == sx);
    CHECK(is_subact(a, sx));
  }
}

TEST_CASE("restrict_to rejects subsets that are not closed") {
  Act s = self_act(rz_pair());
  REQUIRE_THROWS_AS(restrict_to(s, {0}), WorkbenchError);  // S*1 = S escapes {1}
}

TEST_CASE("coproduct sizes add and injections embed") {
  Act s = self_act(rz_pair());
  Act pq = testsupport::pqx_act();
  CoproductResult c = coproduct(s, pq);
  REQUIRE(c.act.size == s.size + pq.size);
  CHECK(c.inj1.is_mono());
  CHECK(c.inj2.is_mono());
  Act e = empty_act(rz_pair());
  CHECK(acts_equal(coproduct(s, e).act, s));
}

TEST_CASE("coproduct of two singletons has two fixed points") {
  Act one = singleton_act(rz_pair());
  Act two = coproduct(one, one).act;
  REQUIRE(two.size == 2);
  for (int s = 0; s < 3; ++s) {
    CHECK(two.act(s, 0) == 0);
    CHECK(two.act(s, 1) == 1);
  }
}

TEST_CASE("coproduct requires one monoid") {
  REQUIRE_THROWS_AS(coproduct(self_act(rz_pair()), self_act(testsupport::catalog_monoid("z2"))),
                    WorkbenchError);
}

TEST_CASE("canonical forms separate non-isomorphic acts") {
  Act one = singleton_act(rz_pair());
  Act two = coproduct(one, one).act;
  CHECK(acts_isomorphic(one, one));
  CHECK_FALSE(acts_isomorphic(one, two));
  CHECK(acts_isomorphic(two, coproduct(one, one).act));
}

TEST_CASE("cyclic acts of the right-zero monoid are S, its half, and a point") {
  auto cs = cyclic_acts(rz_pair());
  REQUIRE(cs.size() == 3);
  CHECK(cs[0].size == 1);
  CHECK(cs[1].size == 2);
  CHECK(cs[2].size == 3);
  for (const Act& c : cs) CHECK(is_cyclic(c));
}

TEST_CASE("subacts of a cyclic act stay small: every catalog monoid of size <= 4") {
  for (const auto& e : builtin_catalog()) {
    if (e.monoid->size() > 4) continue;
    int degree = generation_degree(*e.monoid);
    for (const Act& b : cyclic_acts(e.monoid))
      for (const auto& a : all_subacts(b)) {
        INFO(e.name << " cyclic size " << b.size);
        CHECK(static_cast<int>(min_generating_subact_set(b, a).size()) <= degree);
      }
  }
}
