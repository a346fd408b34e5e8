#include <catch2/catch_amalgamated.hpp>

#include "actwb/enumerate.hpp"
#include "actwb/gen.hpp"
#include "support.hpp"

using namespace actwb;
using testsupport::rz_pair;

TEST_CASE("type of the empty tuple over no parameters has an empty core") {
  PointedTypeRep p = type_rep(self_act(rz_pair()), {}, {});
  REQUIRE(p.core_elements.empty());
  REQUIRE(p.core.size == 0);
}

TEST_CASE("type of a fixed generator is its one-point orbit") {
  PointedTypeRep p = type_rep(self_act(rz_pair()), {1}, {});
  REQUIRE(p.core_elements == std::vector<int>{1});
  REQUIRE(p.core_tuple == std::vector<int>{0});
}

TEST_CASE("type of the identity generates the full self-act") {
  PointedTypeRep p = type_rep(self_act(rz_pair()), {0}, {});
  REQUIRE(p.core_elements == std::vector<int>{0, 1, 2});
}

TEST_CASE("equality is reflexive and detects the generator difference") {
  Act s = self_act(rz_pair());
  PointedTypeRep p1 = type_rep(s, {0}, {});
  PointedTypeRep pa = type_rep(s, {1}, {});
  CHECK(types_equal(p1, p1));
  CHECK(types_equal(pa, pa));
  CHECK_FALSE(types_equal(p1, pa));  // cores have sizes 3 and 1
}

TEST_CASE("the same fixed point in two coproduct copies has one type") {
  Act s = self_act(rz_pair());
  Act two = coproduct(s, s).act;
  PointedTypeRep left = type_rep(two, {1}, {});
  PointedTypeRep right = type_rep(two, {4}, {});  // a in the second copy
  CHECK(types_equal(left, right));
}

TEST_CASE("parameters can force inequality across copies") {
  Act s = self_act(rz_pair());
  Act two = coproduct(s, s).act;
  // Over X = {a_1}: the first copy's identity reaches the parameter, the
  // second copy's does not.
  PointedTypeRep left = type_rep(two, {0}, {1});
  PointedTypeRep right = type_rep(two, {3}, {1});
  CHECK_FALSE(types_equal(left, right));
  CHECK(types_equal_bruteforce(left, right) == types_equal(left, right));
}

TEST_CASE("mismatched preconditions throw the named errors") {
  Act s = self_act(rz_pair());
  PointedTypeRep p = type_rep(s, {0}, {1});
  PointedTypeRep q = type_rep(s, {0}, {2});
  REQUIRE_THROWS_AS(types_equal(p, q), WorkbenchError);  // ParamMismatch
  PointedTypeRep longer = type_rep(s, {0, 1}, {1});
  try {
    types_equal(p, longer);
    FAIL("expected TupleLengthMismatch");
  } catch (const WorkbenchError& e) {
    REQUIRE(e.code() == Errc::tuple_length_mismatch);
  }
  PointedTypeRep other = type_rep(self_act(testsupport::catalog_monoid("z2")), {0}, {});
  REQUIRE_THROWS_AS(types_equal(type_rep(s, {0}, {}), other), WorkbenchError);
}

TEST_CASE("restriction of types") {
  Act s = self_act(rz_pair());
  PointedTypeRep p = type_rep(s, {0}, {1, 2});
  SECTION("restricting to everything is the identity") {
    PointedTypeRep r = restrict_type(p, {1, 2});
    REQUIRE(r.params == p.params);
    REQUIRE(r.core_elements == p.core_elements);
  }
  SECTION("restricting to nothing is the parameter-free type") {
    PointedTypeRep r = restrict_type(p, {});
    REQUIRE(r.params.empty());
  }
  SECTION("chained restriction lands at the smaller set") {
    PointedTypeRep r = restrict_type(restrict_type(p, {1, 2}), {1});
    REQUIRE(r.params == std::vector<int>{1});
    REQUIRE(types_equal_witness(r, restrict_type(p, {1})).equal);
  }
  REQUIRE_THROWS_AS(restrict_type(p, {0, 1}), WorkbenchError);  // 0 is not a parameter
}

TEST_CASE("witness map certifies equality concretely") {
  Act s = self_act(rz_pair());
  Act two = coproduct(s, s).act;
  TypeEqWitness w = types_equal_witness(type_rep(two, {1}, {}), type_rep(two, {4}, {}));
  REQUIRE(w.equal);
  REQUIRE(w.map == std::vector<std::pair<int, int>>{{1, 4}});
}

TEST_CASE("criterion matches the bijection oracle exhaustively at small size") {
  long pairs = 0;
  for (const auto& e : builtin_catalog()) {
    if (e.monoid->size() > 3) continue;
    for (int sz = 1; sz <= 3; ++sz) {
      for (const Act& n : act_catalog(e.monoid, sz)) {
        for (unsigned xm = 0; xm < (1u << n.size); ++xm) {
          std::vector<int> xs;
          for (int x = 0; x < n.size; ++x)
            if (xm >> x & 1) xs.push_back(x);
          for (int b1 = 0; b1 < n.size; ++b1)
            for (int b2 = 0; b2 < n.size; ++b2) {
              PointedTypeRep p = type_rep(n, {b1}, xs);
              PointedTypeRep q = type_rep(n, {b2}, xs);
              if (p.core_elements.size() > 5 || q.core_elements.size() > 5) continue;
              ++pairs;
              INFO(e.name << " size " << sz << " X mask " << xm << " b " << b1 << "," << b2);
              REQUIRE(types_equal(p, q) == types_equal_bruteforce(p, q));
            }
        }
      }
    }
  }
  REQUIRE(pairs > 500);
}

TEST_CASE("equality is invariant under extending the ambient act") {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto& cat = builtin_catalog();
    const auto& e = cat[rng.below(static_cast<int>(cat.size()))];
    Act n = random_act(e.monoid, 1 + rng.below(4), rng);
    Act w = random_act(e.monoid, 1 + rng.below(2), rng);
    auto xs = random_subset(n.size, rng);
    int b = rng.below(n.size);
    PointedTypeRep p = type_rep(n, {b}, xs);
    PointedTypeRep q = type_rep(coproduct(n, w).act, {b}, xs);
    INFO("case " << i << " over " << e.name);
    REQUIRE(types_equal(p, q));
  }
}
