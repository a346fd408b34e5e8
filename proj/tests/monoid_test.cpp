#include <catch2/catch_amalgamated.hpp>

#include "actwb/monoid.hpp"
#include "support.hpp"

using namespace actwb;
using testsupport::catalog_monoid;

TEST_CASE("validate accepts the one-element monoid") {
  auto m = Monoid::validate({{0}});
  REQUIRE(m.size() == 1);
  REQUIRE(m.commutative());
}

TEST_CASE("validate accepts the order-two group") {
  auto m = Monoid::validate({{0, 1}, {1, 0}});
  REQUIRE(m.size() == 2);
  REQUIRE(m.mul(1, 1) == 0);
}

TEST_CASE("validate accepts the right-zero-with-identity table") {
  // The 2x2 matrices (1 x; 0 0) over Z2 with an identity adjoined multiply by
  // M_x * M_y = M_y, so the two non-identity elements form a right-zero pair.
  auto m = Monoid::validate({{0, 1, 2}, {1, 1, 2}, {2, 1, 2}});
  REQUIRE(m.mul(1, 2) == 2);  // a*b = b
  REQUIRE(m.mul(2, 1) == 1);  // b*a = a
  REQUIRE_FALSE(m.commutative());
}

TEST_CASE("validate rejects a non-associative table with the first triple") {
  try {
    Monoid::validate({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
    FAIL("expected NotAssociative");
  } catch (const WorkbenchError& e) {
    REQUIRE(e.code() == Errc::not_associative);
    REQUIRE(e.detail() == std::vector<long>{1, 1, 2});
  }
}

TEST_CASE("validate rejects tables whose identity is not at index 0") {
  try {
    Monoid::validate({{1, 0}, {0, 1}});
    FAIL("expected IdentityLawFails");
  } catch (const WorkbenchError& e) {
    REQUIRE(e.code() == Errc::identity_law);
  }
}

TEST_CASE("validate rejects malformed tables") {
  REQUIRE_THROWS_AS(Monoid::validate({{0, 1}, {1}}), WorkbenchError);
  REQUIRE_THROWS_AS(Monoid::validate({{0, 5}, {1, 0}}), WorkbenchError);
  REQUIRE_THROWS_AS(Monoid::validate({}), WorkbenchError);
}

TEST_CASE("principal ideals") {
  auto m = testsupport::rz_pair();
  SECTION("the identity generates everything") {
    REQUIRE(principal_ideal(*m, 0) == std::vector<int>{0, 1, 2});
  }
  SECTION("right-zero elements generate singletons") {
    REQUIRE(principal_ideal(*m, 1) == std::vector<int>{1});
    REQUIRE(principal_ideal(*m, 2) == std::vector<int>{2});
  }
  SECTION("in a group every principal ideal is everything") {
    auto z2 = catalog_monoid("z2");
    REQUIRE(principal_ideal(*z2, 1) == std::vector<int>{0, 1});
  }
  REQUIRE_THROWS_AS(principal_ideal(*m, 7), WorkbenchError);
}

TEST_CASE("ideal inventory of the trivial monoid") {
  auto ideals = all_left_ideals(*catalog_monoid("trivial"));
  REQUIRE(ideals.size() == 2);
  REQUIRE(ideals[0].elements.empty());
  REQUIRE(ideals[0].min_generators.empty());
  REQUIRE(ideals[1].elements == std::vector<int>{0});
}

TEST_CASE("ideal inventory of the right-zero monoid") {
  auto ideals = all_left_ideals(*testsupport::rz_pair());
  REQUIRE(ideals.size() == 5);
  std::vector<size_t> counts;
  for (const auto& ideal : ideals) counts.push_back(ideal.min_generators.size());
  REQUIRE(counts == std::vector<size_t>{0, 1, 1, 2, 1});
  // The two-generator ideal is {a,b}: neither singleton orbit covers the other.
  REQUIRE(ideals[3].elements == std::vector<int>{1, 2});
  REQUIRE(ideals[3].min_generators == std::vector<int>{1, 2});
}

TEST_CASE("groups have no proper nonempty left ideals") {
  auto ideals = all_left_ideals(*catalog_monoid("z2"));
  REQUIRE(ideals.size() == 2);
  REQUIRE(ideals[1].elements == std::vector<int>{0, 1});
}

TEST_CASE("generation degree") {
  CHECK(generation_degree(*catalog_monoid("trivial")) == 1);
  CHECK(generation_degree(*catalog_monoid("z2")) == 1);
  CHECK(generation_degree(*catalog_monoid("z4")) == 1);
  CHECK(generation_degree(*testsupport::rz_pair()) == 2);
  CHECK(generation_degree(*catalog_monoid("rzero4")) == 4);
  CHECK(generation_degree(*catalog_monoid("lzero4")) == 1);
}

TEST_CASE("right reversibility") {
  CHECK(right_reversible(*catalog_monoid("z3")));
  CHECK(right_reversible(*catalog_monoid("chain2")));
  CHECK_FALSE(right_reversible(*testsupport::rz_pair()));
  CHECK_FALSE(right_reversible(*catalog_monoid("rzero3")));
  CHECK(right_reversible(*catalog_monoid("lzero3")));
}

TEST_CASE("every commutative catalog monoid is right reversible") {
  for (const auto& e : builtin_catalog())
    if (e.monoid->commutative()) CHECK(right_reversible(*e.monoid));
}

TEST_CASE("ideal lattice closure properties over the catalog") {
  for (const auto& e : builtin_catalog()) {
    const Monoid& m = *e.monoid;
    auto ideals = all_left_ideals(m);
    std::vector<std::vector<int>> sets;
    for (const auto& ideal : ideals) sets.push_back(ideal.elements);
    for (int a = 0; a < m.size(); ++a) {
      INFO(e.name << " principal ideal of " << a);
      CHECK(std::find(sets.begin(), sets.end(), principal_ideal(m, a)) != sets.end());
    }
    for (const auto& i : sets)
      for (const auto& j : sets) {
        std::vector<int> u;
        std::set_union(i.begin(), i.end(), j.begin(), j.end(), std::back_inserter(u));
        INFO(e.name << " union closure");
        CHECK(std::find(sets.begin(), sets.end(), u) != sets.end());
      }
    CHECK(generation_degree(m) <= m.size());
  }
}
