#include <catch2/catch_amalgamated.hpp>

#include "actwb/enumerate.hpp"
#include "actwb/gen.hpp"
#include "support.hpp"

using namespace actwb;
using testsupport::rz_pair;

TEST_CASE("pushout of identities is the act itself") {
  Act s = self_act(rz_pair());
  PushoutResult po = pushout(identity_hom(s), identity_hom(s));
  REQUIRE(acts_equal(po.act, s));
}

TEST_CASE("pushout over the empty act is the coproduct") {
  Act s = self_act(rz_pair());
  Act e = empty_act(rz_pair());
  ActHom to1 = ActHom::trusted(e, s, {});
  PushoutResult po = pushout(to1, to1);
  REQUIRE(po.act.size == 2 * s.size);
}

TEST_CASE("two copies of S glued along the fixed point a") {
  Act s = self_act(rz_pair());
  ActHom inc = inclusion_hom(s, {1});
  PushoutResult po = pushout(inc, inc);
  REQUIRE(po.act.size == 5);
  CHECK(po.leg1.is_mono());
  CHECK(po.leg2.is_mono());
  // the glued element is shared
  REQUIRE(po.leg1.map[1] == po.leg2.map[1]);
}

TEST_CASE("pullback of identities is the diagonal") {
  Act s = self_act(rz_pair());
  PullbackResult pb = pullback(identity_hom(s), identity_hom(s));
  REQUIRE(pb.act.size == s.size);
  for (auto [x, y] : pb.pairs) REQUIRE(x == y);
}

TEST_CASE("pullback of subact inclusions is their intersection") {
  Act s = self_act(rz_pair());
  PullbackResult pb = pullback(inclusion_hom(s, {1, 2}), inclusion_hom(s, {2}));
  REQUIRE(pb.act.size == 1);
  REQUIRE(pb.pairs[0] == std::pair<int, int>{1, 0});
}

TEST_CASE("pullback of a cyclic quotient against a subact is the preimage ideal") {
  // S -> V collapses {a,b}; pulling back the fixed half of V gives {a,b} <= S.
  Act s = self_act(rz_pair());
  auto qs = quotients_of_self(rz_pair());
  const Act* v = nullptr;
  for (const Act& q : qs)
    if (q.size == 2) v = &q;
  REQUIRE(v != nullptr);
  ActHom proj = ActHom::checked(s, *v, {0, 1, 1});
  ActHom half = inclusion_hom(*v, {1});
  PullbackResult pb = pullback(proj, half);
  REQUIRE(pb.act.size == 2);
  ActHom to_s = pb.proj1;
  REQUIRE(to_s.is_mono());
  std::vector<int> image = sorted_unique(to_s.map);
  REQUIRE(image == std::vector<int>{1, 2});
}

TEST_CASE("pullback projections inherit surjectivity") {
  Act s = self_act(rz_pair());
  auto qs = quotients_of_self(rz_pair());
  for (const Act& q : qs) {
    if (q.size != 2) continue;
    ActHom proj = ActHom::checked(s, q, {0, 1, 1});
    REQUIRE(proj.is_epi());
    PullbackResult pb = pullback(proj, identity_hom(q));
    CHECK(pb.proj2.is_epi());
  }
}

TEST_CASE("equalizer and coequalizer of a parallel pair") {
  Act s = self_act(rz_pair());
  auto homs = enumerate_homs(s, s);
  const ActHom& id = homs[0];
  const ActHom& const_a = homs[1];
  SECTION("equal maps") {
    REQUIRE(equalizer(id, id).act.size == s.size);
    REQUIRE(acts_equal(coequalizer(id, id).act, s));
  }
  SECTION("identity against the collapse onto a") {
    EqualizerResult eq = equalizer(id, const_a);
    REQUIRE(eq.act.size == 1);  // only a satisfies s = a
    CoequalizerResult coeq = coequalizer(id, const_a);
    REQUIRE(coeq.act.size == 1);  // everything is glued to a
  }
  SECTION("empty parallel pair") {
    Act e = empty_act(rz_pair());
    ActHom f = ActHom::trusted(e, s, {});
    REQUIRE(equalizer(f, f).act.size == 0);
    REQUIRE(acts_equal(coequalizer(f, f).act, s));
  }
}

TEST_CASE("coequalizer glues two chosen points over the trivial monoid") {
  auto t = testsupport::catalog_monoid("trivial");
  Act pt = singleton_act(t);
  Act two = validate_act(t, {{0, 1}});
  ActHom f = ActHom::checked(pt, two, {0});
  ActHom g = ActHom::checked(pt, two, {1});
  REQUIRE(coequalizer(f, g).act.size == 1);
}

TEST_CASE("epi-mono factorization through the image") {
  Act s = self_act(rz_pair());
  Act pq = testsupport::pqx_act();
  // s -> s*x lands on the full carrier {p,q,x}, which is cyclic.
  ActHom h = ActHom::checked(s, pq, {2, 0, 1});
  Factorization f = epi_mono_factorize(h);
  REQUIRE(f.image.size == 3);
  CHECK(f.epi.is_epi());
  CHECK(f.mono.is_mono());
  REQUIRE(compose(f.mono, f.epi).map == h.map);
  CHECK(is_cyclic(f.image));

  ActHom collapse = ActHom::checked(s, pq, {0, 0, 0});
  REQUIRE(epi_mono_factorize(collapse).image.size == 1);
  ActHom inj = identity_hom(s);
  REQUIRE(epi_mono_factorize(inj).epi.is_mono());
}

TEST_CASE("disjoint amalgamation meets only in the base") {
  Act s = self_act(rz_pair());
  SECTION("amalgam of identities") {
    AmalgamResult am = disjoint_amalgam(identity_hom(s), identity_hom(s));
    REQUIRE(am.act.size == s.size);
  }
  SECTION("over the empty base") {
    Act e = empty_act(rz_pair());
    ActHom f = ActHom::trusted(e, s, {});
    AmalgamResult am = disjoint_amalgam(f, f);
    REQUIRE(am.act.size == 2 * s.size);
  }
  SECTION("two copies of S over the fixed point a") {
    ActHom inc = inclusion_hom(s, {1});
    AmalgamResult am = disjoint_amalgam(inc, inc);
    REQUIRE(am.act.size == 5);
    std::vector<int> im1 = sorted_unique(am.f1.map);
    std::vector<int> im2 = sorted_unique(am.f2.map);
    std::vector<int> base_image;
    for (int x : std::vector<int>{1}) base_image.push_back(am.f1.map[x]);
    REQUIRE(set_intersect_sorted(im1, im2) == base_image);
  }
  SECTION("non-monos are rejected") {
    Act one = singleton_act(rz_pair());
    Act two = coproduct(one, one).act;
    ActHom collapse = ActHom::checked(two, one, {0, 0});
    REQUIRE_THROWS_AS(disjoint_amalgam(collapse, collapse), WorkbenchError);
  }
}

TEST_CASE("pushouts preserve monos along arbitrary homs, randomized") {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const auto& cat = builtin_catalog();
    const auto& e = cat[rng.below(static_cast<int>(cat.size()))];
    Act a0 = random_act(e.monoid, 1 + rng.below(3), rng);
    Extension ext = random_extension(a0, 2, rng);
    Act other = random_act(e.monoid, 1 + rng.below(3), rng);
    auto homs = enumerate_homs(a0, other);
    if (homs.empty()) continue;
    PushoutResult po = pushout(ext.embed, homs[rng.below(static_cast<int>(homs.size()))]);
    INFO("case " << i << " over " << e.name);
    REQUIRE(po.leg2.is_mono());
  }
}

TEST_CASE("pushout universal property on small cocones") {
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    const auto& cat = builtin_catalog();
    const auto& e = cat[rng.below(static_cast<int>(cat.size()))];
    Act a0 = random_act(e.monoid, 1 + rng.below(2), rng);
    Extension e1 = random_extension(a0, 2, rng);
    Extension e2 = random_extension(a0, 2, rng);
    PushoutResult po = pushout(e1.embed, e2.embed);
    for (const Act& t : act_catalog(e.monoid, 2)) {
      for (const ActHom& c1 : enumerate_homs(e1.bigger, t))
        for (const ActHom& c2 : enumerate_homs(e2.bigger, t)) {
          if (compose(c1, e1.embed).map != compose(c2, e2.embed).map) continue;
          auto u = pushout_mediate(po, c1, c2);
          REQUIRE(u.has_value());
          long witnesses = 0;
          for (const ActHom& w : enumerate_homs(po.act, t))
            if (compose(w, po.leg1).map == c1.map && compose(w, po.leg2).map == c2.map)
              ++witnesses;
          REQUIRE(witnesses == 1);
        }
    }
  }
}
