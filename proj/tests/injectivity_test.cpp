#include <catch2/catch_amalgamated.hpp>

#include "actwb/enumerate.hpp"
#include "actwb/injectivity.hpp"
#include "support.hpp"

using namespace actwb;
using testsupport::rz_pair;

TEST_CASE("zero elements") {
  CHECK(has_zero(singleton_act(rz_pair())));
  CHECK_FALSE(has_zero(empty_act(rz_pair())));
  CHECK(has_zero(self_act(rz_pair())));  // the right-zero elements are fixed
  CHECK(zero_element(self_act(rz_pair())) == 1);
  CHECK_FALSE(has_zero(self_act(testsupport::catalog_monoid("z2"))));
}

TEST_CASE("singletons are n-injective for every n") {
  Act one = singleton_act(rz_pair());
  for (int n = 1; n <= 3; ++n) CHECK(is_n_injective(one, n).verdict);
  CHECK(is_weakly_injective(one).verdict);
}

TEST_CASE("the {p,q,x} act separates 1-injective from 2-injective") {
  Act q = testsupport::pqx_act();
  CHECK(is_n_injective(q, 1).verdict);
  InjectivityVerdict v = is_n_injective(q, 2);
  REQUIRE_FALSE(v.verdict);
  REQUIRE(v.counterexample.has_value());
  // the non-extendable hom sends a to q and b to p
  REQUIRE(v.counterexample->small_elements == std::vector<int>{1, 2});
  REQUIRE(v.counterexample->hom == std::vector<int>{1, 0});
  // replay: no element realizes the pattern
  bool realizable = false;
  for (int q0 = 0; q0 < q.size; ++q0)
    realizable = realizable || (q.act(1, q0) == 1 && q.act(2, q0) == 0);
  REQUIRE_FALSE(realizable);
}

TEST_CASE("the empty act fails every injectivity level") {
  Act e = empty_act(testsupport::catalog_monoid("trivial"));
  CHECK_FALSE(is_n_injective(e, 1).verdict);
  CHECK_FALSE(is_weakly_injective(e).verdict);
  CHECK_FALSE(is_injective(e).verdict);
}

TEST_CASE("weak injectivity of the self-act over the trivial monoid") {
  CHECK(is_weakly_injective(self_act(testsupport::catalog_monoid("trivial"))).verdict);
}

TEST_CASE("two singletons are weakly injective nowhere over the right-zero monoid") {
  Act one = singleton_act(rz_pair());
  Act two = coproduct(one, one).act;
  InjectivityVerdict v = is_weakly_injective(two);
  REQUIRE_FALSE(v.verdict);
  REQUIRE(v.counterexample->small_elements == std::vector<int>{1, 2});
  CHECK_FALSE(is_injective(two).verdict);
}

TEST_CASE("Baer criterion accepts singletons and rejects actless zeros") {
  CHECK(is_injective(singleton_act(rz_pair())).verdict);
  InjectivityVerdict v = is_injective(empty_act(rz_pair()));
  REQUIRE_FALSE(v.verdict);
  REQUIRE(v.counterexample.has_value());  // the adjoin-a-zero instance
  REQUIRE(v.counterexample->big.size == 1);
}

TEST_CASE("Baer criterion agrees with the direct definition at small bounds") {
  for (const auto& name : {"trivial", "z2", "z3", "rzero2", "lzero2", "chain2", "cyc3"}) {
    auto m = testsupport::catalog_monoid(name);
    for (int sz = 0; sz <= 3; ++sz)
      for (const Act& q : act_catalog(m, sz)) {
        INFO(name << " act of size " << sz);
        int bound = std::max(m->size(), q.size + 1);
        REQUIRE(is_injective(q).verdict == injective_direct(q, bound));
      }
  }
}

TEST_CASE("purity of singletons at any bound") {
  CHECK(is_absolutely_pure(singleton_act(rz_pair()), 4).verdict);
  InjectivityVerdict v = is_absolutely_pure(singleton_act(rz_pair()), 2);
  CHECK(v.param == 2);
}

TEST_CASE("the {p,q,x} act is impure at bound 4 via the ideal pair") {
  InjectivityVerdict v = is_absolutely_pure(testsupport::pqx_act(), 4);
  REQUIRE_FALSE(v.verdict);
  REQUIRE(v.counterexample.has_value());
  REQUIRE(v.counterexample->big.size <= 3);
}

TEST_CASE("purity replay: the counterexample hom really has no extension") {
  InjectivityVerdict v = is_absolutely_pure(testsupport::pqx_act(), 4);
  REQUIRE(v.counterexample.has_value());
  const ExtensionFailure& ce = *v.counterexample;
  std::map<int, int> cons;
  for (size_t i = 0; i < ce.small_elements.size(); ++i)
    cons[ce.small_elements[i]] = ce.hom[i];
  REQUIRE_FALSE(find_hom(ce.big, testsupport::pqx_act(), cons).has_value());
}

TEST_CASE("injectivity hierarchy is monotone over small acts") {
  for (const auto& e : builtin_catalog()) {
    if (e.monoid->size() > 4) continue;
    int g = generation_degree(*e.monoid);
    for (int sz = 0; sz <= 3; ++sz)
      for (const Act& q : act_catalog(e.monoid, sz)) {
        INFO(e.name << " size " << sz);
        bool weak = is_weakly_injective(q).verdict;
        CHECK(weak == is_n_injective(q, g).verdict);
        for (int n = 1; n < g; ++n)
          if (is_n_injective(q, n + 1).verdict) CHECK(is_n_injective(q, n).verdict);
        if (is_injective(q).verdict) CHECK(weak);
      }
  }
}

TEST_CASE("a strictness witness of size five exists over rzero3 at level two") {
  auto m = testsupport::catalog_monoid("rzero3");
  bool found = false;
  for (int sz = 1; sz <= 5 && !found; ++sz)
    for (const Act& q : act_catalog(m, sz))
      if (is_n_injective(q, 2).verdict && !is_n_injective(q, 3).verdict) {
        found = true;
        break;
      }
  REQUIRE(found);
}

TEST_CASE("no act of size five separates levels two and three over rzero4") {
  // A separating act needs two fixed points and every pair pattern over each
  // of the six generator pairs; five carrier slots cannot host that.
  auto m = testsupport::catalog_monoid("rzero4");
  for (int sz = 1; sz <= 5; ++sz)
    for (const Act& q : act_catalog(m, sz)) {
      INFO("size " << sz);
      bool separating = is_n_injective(q, 2).verdict && !is_n_injective(q, 3).verdict;
      CHECK_FALSE(separating);
    }
}

TEST_CASE("coproduct dichotomy over the catalog at act size three") {
  for (const auto& e : builtin_catalog()) {
    if (e.monoid->size() > 4) continue;
    DichotomyScan scan = dichotomy_scan(e.monoid, 3);
    INFO(e.name);
    CHECK_FALSE(scan.violation);
    if (e.name == "rzero2") CHECK(scan.coproduct_failures > 0);
    if (e.name == "z3") CHECK(scan.coproduct_failures == 0);
  }
}
