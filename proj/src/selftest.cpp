#include "actwb/selftest.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "actwb/enumerate.hpp"
#include "actwb/independence.hpp"
#include "actwb/injectivity.hpp"
#include "actwb/saturation.hpp"

namespace actwb {

namespace {

std::vector<std::vector<int>> cyclic_group_table(int k) {
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int s = 0; s < k; ++s)
    for (int u = 0; u < k; ++u) t[s][u] = (s + u) % k;
  return t;
}

std::vector<std::vector<int>> right_zero_adjoined(int k) {
  const int n = k + 1;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int u = 0; u < n; ++u) t[0][u] = u;
  for (int s = 1; s < n; ++s) {
    t[s][0] = s;
    for (int u = 1; u < n; ++u) t[s][u] = u;
  }
  return t;
}

std::vector<std::vector<int>> left_zero_adjoined(int k) {
  const int n = k + 1;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int u = 0; u < n; ++u) t[0][u] = u;
  for (int s = 1; s < n; ++s)
    for (int u = 0; u < n; ++u) t[s][u] = s;  // s*1 = s and s*u = s alike
  return t;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> c;
    c.push_back({"trivial", make_monoid({{0}})});
    c.push_back({"z2", make_monoid(cyclic_group_table(2))});
    c.push_back({"z3", make_monoid(cyclic_group_table(3))});
    c.push_back({"z4", make_monoid(cyclic_group_table(4))});
    c.push_back({"sym2", make_monoid({{0, 1}, {1, 0}})});
    c.push_back({"rzero2", make_monoid(right_zero_adjoined(2))});
    c.push_back({"rzero3", make_monoid(right_zero_adjoined(3))});
    c.push_back({"rzero4", make_monoid(right_zero_adjoined(4))});
    c.push_back({"lzero2", make_monoid(left_zero_adjoined(2))});
    c.push_back({"lzero3", make_monoid(left_zero_adjoined(3))});
    c.push_back({"lzero4", make_monoid(left_zero_adjoined(4))});
    c.push_back({"chain2", make_monoid({{0, 1}, {1, 1}})});
    c.push_back({"cyc3", make_monoid({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}})});
    return c;
  }();
  return catalog;
}

// ---- oracles ---------------------------------------------------------------

bool types_equal_bruteforce(const PointedTypeRep& p, const PointedTypeRep& q) {
  if (p.params != q.params || p.tuple.size() != q.tuple.size()) return false;
  if (p.core_elements.size() != q.core_elements.size()) return false;
  const Act& na = p.ambient;
  const Act& nb = q.ambient;
  const size_t k = p.core_elements.size();

  std::map<int, int> forced;
  for (int x : p.params) forced[x] = x;
  for (size_t l = 0; l < p.tuple.size(); ++l) {
    auto it = forced.find(p.tuple[l]);
    if (it != forced.end() && it->second != q.tuple[l]) return false;
    forced[p.tuple[l]] = q.tuple[l];
  }
  for (auto [d, v] : forced)
    if (!std::binary_search(q.core_elements.begin(), q.core_elements.end(), v)) return false;

  std::vector<int> free_dom, free_cod = q.core_elements;
  for (int d : p.core_elements)
    if (!forced.count(d)) free_dom.push_back(d);
  for (auto [d, v] : forced) {
    auto it = std::find(free_cod.begin(), free_cod.end(), v);
    if (it == free_cod.end()) return false;  // forced images must be distinct
    free_cod.erase(it);
  }
  if (free_dom.size() != free_cod.size()) return false;

  std::sort(free_cod.begin(), free_cod.end());
  std::vector<int> perm(free_cod.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::map<int, int> f = forced;
    for (size_t i = 0; i < free_dom.size(); ++i) f[free_dom[i]] = free_cod[perm[i]];
    bool ok = true;
    for (size_t i = 0; i < k && ok; ++i) {
      int d = p.core_elements[i];
      for (int s = 0; s < na.msize() && ok; ++s) ok = f[na.act(s, d)] == nb.act(s, f[d]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool injective_direct(const Act& q, int bound) {
  auto check_inclusions = [&](const Act& b) {
    for (const std::vector<int>& a : all_subacts(b)) {
      Act a_act = restrict_to(b, a);
      for (const ActHom& f : enumerate_homs(a_act, q)) {
        std::map<int, int> cons;
        for (size_t i = 0; i < a.size(); ++i) cons[a[i]] = f.map[i];
        if (!find_hom(b, q, cons)) return false;
      }
    }
    return true;
  };
  for (int m = 1; m <= bound; ++m)
    for (const Act& b : act_catalog(q.monoid, m))
      if (!check_inclusions(b)) return false;
  if (q.size + 1 > bound && !check_inclusions(adjoin_zero(q))) return false;
  return true;
}

bool independent_by_subact_search(const Act& b, const std::vector<int>& base,
                                  const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> xs = sorted_unique(x), ys = sorted_unique(y), bs = sorted_unique(base);
  auto subs = all_subacts(b);
  for (const auto& l1 : subs) {
    if (!subset_of(xs, l1)) continue;
    for (const auto& l2 : subs) {
      if (!subset_of(ys, l2)) continue;
      if (subset_of(set_intersect_sorted(l1, l2), bs)) return true;
    }
  }
  return false;
}

DichotomyScan dichotomy_scan(const MonoidPtr& m, int max_act_size) {
  DichotomyScan scan;
  scan.right_rev = right_reversible(*m);
  std::vector<Act> injectives;
  for (int sz = 0; sz <= max_act_size; ++sz)
    for (const Act& a : act_catalog(m, sz))
      if (is_injective(a).verdict) injectives.push_back(a);
  scan.injective_count = static_cast<int>(injectives.size());
  for (size_t i = 0; i < injectives.size(); ++i)
    for (size_t j = i; j < injectives.size(); ++j) {
      ++scan.coproducts_checked;
      if (!is_injective(coproduct(injectives[i], injectives[j]).act).verdict)
        ++scan.coproduct_failures;
    }
  scan.violation = scan.right_rev && scan.coproduct_failures > 0;
  return scan;
}

// ---- property suites -------------------------------------------------------

namespace {

struct Prop {
  PropertyResult r;
  explicit Prop(std::string name) { r.name = std::move(name); }
  void tally() { ++r.cases; }
  bool ok() const { return r.pass; }
  void fail(const std::string& cx) {
    if (r.pass) {
      r.pass = false;
      r.counterexample = cx;
    }
  }
  void finding(const std::string& f) { r.findings.push_back(f); }
};

std::string describe(const std::string& what, const CatalogEntry& e) {
  return what + " over " + e.name;
}

Act random_small_act(const MonoidPtr& m, int cap, Rng& rng) {
  return random_act(m, 1 + rng.below(cap), rng);
}

const CatalogEntry& pick_monoid(Rng& rng) {
  const auto& cat = builtin_catalog();
  return cat[rng.below(static_cast<int>(cat.size()))];
}

PropertyResult prop_monoid_invariants(int size_cap) {
  Prop p("monoid-core: ideal absorption, unions, principal membership, degree bound");
  if (size_cap == 0) return p.r;
  for (const auto& e : builtin_catalog()) {
    const Monoid& m = *e.monoid;
    auto ideals = all_left_ideals(m);
    std::vector<std::vector<int>> sets;
    for (const auto& ideal : ideals) sets.push_back(ideal.elements);
    for (const auto& ideal : ideals) {
      p.tally();
      for (int a : ideal.elements)
        for (int s = 0; s < m.size(); ++s)
          if (!std::binary_search(ideal.elements.begin(), ideal.elements.end(), m.mul(s, a)))
            p.fail(describe("absorption breaks", e));
      if (!subset_of(ideal.min_generators, ideal.elements))
        p.fail(describe("generators escape the ideal", e));
    }
    for (size_t i = 0; i < sets.size(); ++i)
      for (size_t j = i; j < sets.size(); ++j) {
        p.tally();
        if (std::find(sets.begin(), sets.end(), set_union_sorted(sets[i], sets[j])) == sets.end())
          p.fail(describe("union of ideals missing", e));
      }
    for (int a = 0; a < m.size(); ++a) {
      p.tally();
      if (std::find(sets.begin(), sets.end(), principal_ideal(m, a)) == sets.end())
        p.fail(describe("principal ideal missing", e));
    }
    if (generation_degree(m) > m.size()) p.fail(describe("degree exceeds size", e));
    if (m.commutative() && !right_reversible(m))
      p.fail(describe("commutative but not right reversible", e));
  }
  return p.r;
}

PropertyResult prop_closure_operator(uint64_t seed, int size_cap) {
  Prop p("act-core: generated subact is a closure operator");
  Rng rng(seed ^ 0x101);
  for (int i = 0; i < 40 * size_cap; ++i) {
    p.tally();
    const auto& e = pick_monoid(rng);
    Act a = random_small_act(e.monoid, std::max(2, size_cap), rng);
    auto x = random_subset(a.size, rng);
    auto sx = generated_subact(a, x);
    if (!subset_of(sorted_unique(x), sx)) p.fail(describe("not extensive", e));
    if (generated_subact(a, sx) != sx) p.fail(describe("not idempotent", e));
    auto y = random_subset(a.size, rng);
    auto xy = set_union_sorted(sorted_unique(x), sorted_unique(y));
    if (!subset_of(sx, generated_subact(a, xy))) p.fail(describe("not monotone", e));
    if (x.empty() != sx.empty()) p.fail(describe("empty-set law breaks", e));
  }
  return p.r;
}

PropertyResult prop_mono_epi_cancellation(int size_cap) {
  Prop p("act-core: mono = left-cancellable, epi = right-cancellable");
  if (size_cap == 0) return p.r;
  std::vector<MonoidPtr> ms = {builtin_catalog()[0].monoid, builtin_catalog()[1].monoid,
                               builtin_catalog()[5].monoid};
  for (const auto& m : ms) {
    std::vector<Act> pool;
    for (int sz = 0; sz <= std::min(4, size_cap); ++sz)
      for (const Act& a : act_catalog(m, sz)) pool.push_back(a);
    for (const Act& a : pool)
      for (const Act& b : pool) {
        if (a.size > 2 || b.size > 3) continue;
        for (const ActHom& f : enumerate_homs(a, b)) {
          p.tally();
          bool left_cancellable = true;
          for (const Act& t : pool) {
            auto homs = enumerate_homs(t, a);
            for (size_t i = 0; i < homs.size() && left_cancellable; ++i)
              for (size_t j = i + 1; j < homs.size() && left_cancellable; ++j)
                if (compose(f, homs[i]).map == compose(f, homs[j]).map)
                  left_cancellable = false;
          }
          if (left_cancellable != f.is_mono()) p.fail("mono/cancellation disagree");
          bool right_cancellable = true;
          for (const Act& t : pool) {
            auto homs = enumerate_homs(b, t);
            for (size_t i = 0; i < homs.size() && right_cancellable; ++i)
              for (size_t j = i + 1; j < homs.size() && right_cancellable; ++j)
                if (compose(homs[i], f).map == compose(homs[j], f).map)
                  right_cancellable = false;
          }
          if (right_cancellable != f.is_epi()) p.fail("epi/cancellation disagree");
        }
      }
  }
  return p.r;
}

PropertyResult prop_pushout_pullback_stability(uint64_t seed, int size_cap) {
  Prop p("act-core: pushouts preserve monos, pullbacks preserve epis");
  Rng rng(seed ^ 0x202);
  for (int i = 0; i < 40 * size_cap; ++i) {
    p.tally();
    const auto& e = pick_monoid(rng);
    Act a0 = random_small_act(e.monoid, std::max(2, size_cap - 1), rng);
    Extension ext = random_extension(a0, 2, rng);
    Act a2 = random_small_act(e.monoid, std::max(2, size_cap), rng);
    auto homs = enumerate_homs(a0, a2);
    if (homs.empty()) continue;
    const ActHom& any = homs[rng.below(static_cast<int>(homs.size()))];
    PushoutResult po = pushout(ext.embed, any);
    if (!po.leg2.is_mono()) p.fail(describe("pushout of a mono lost injectivity", e));

    // Dual check: pull an epi back along an arbitrary map.
    Act b = random_small_act(e.monoid, std::max(2, size_cap - 1), rng);
    Act big = random_extension(b, 2, rng).bigger;
    auto onto = enumerate_homs(big, b);
    const ActHom* epi = nullptr;
    for (const auto& h : onto)
      if (h.is_epi()) {
        epi = &h;
        break;
      }
    if (!epi) continue;
    auto others = enumerate_homs(a2, b);
    if (others.empty()) continue;
    PullbackResult pb = pullback(*epi, others[rng.below(static_cast<int>(others.size()))]);
    if (!pb.proj2.is_epi()) p.fail(describe("pullback of an epi lost surjectivity", e));
  }
  return p.r;
}

PropertyResult prop_universal_properties(uint64_t seed, int size_cap) {
  Prop p("act-core: pushout/pullback universal property (mediating exists uniquely)");
  Rng rng(seed ^ 0x303);
  for (int i = 0; i < 15 * size_cap; ++i) {
    p.tally();
    const auto& e = pick_monoid(rng);
    Act a0 = random_small_act(e.monoid, 2, rng);
    Act a1 = random_extension(a0, 2, rng).bigger;
    Act a2 = random_extension(a0, 2, rng).bigger;
    auto h1s = enumerate_homs(a0, a1);
    auto h2s = enumerate_homs(a0, a2);
    if (h1s.empty() || h2s.empty()) continue;
    ActHom g1 = h1s[rng.below(static_cast<int>(h1s.size()))];
    ActHom g2 = h2s[rng.below(static_cast<int>(h2s.size()))];
    PushoutResult po = pushout(g1, g2);
    for (const Act& t : act_catalog(e.monoid, 1 + rng.below(3))) {
      for (const ActHom& c1 : enumerate_homs(a1, t)) {
        for (const ActHom& c2 : enumerate_homs(a2, t)) {
          if (compose(c1, g1).map != compose(c2, g2).map) continue;
          auto u = pushout_mediate(po, c1, c2);
          if (!u) {
            p.fail(describe("cocone does not factor through the pushout", e));
            continue;
          }
          long count = 0;
          for (const ActHom& w : enumerate_homs(po.act, t))
            if (compose(w, po.leg1).map == c1.map && compose(w, po.leg2).map == c2.map) ++count;
          if (count != 1) p.fail(describe("mediating map not unique", e));
        }
      }
    }

    // Dual side: cones over a cospan factor uniquely through the pullback.
    auto d1s = enumerate_homs(a1, a0);
    auto d2s = enumerate_homs(a2, a0);
    if (d1s.empty() || d2s.empty()) continue;
    PullbackResult pb = pullback(d1s[rng.below(static_cast<int>(d1s.size()))],
                                 d2s[rng.below(static_cast<int>(d2s.size()))]);
    const ActHom& q1 = pb.proj1;
    const ActHom& q2 = pb.proj2;
    for (const Act& t : act_catalog(e.monoid, 1 + rng.below(2))) {
      for (const ActHom& c1 : enumerate_homs(t, a1)) {
        for (const ActHom& c2 : enumerate_homs(t, a2)) {
          bool cone = true;
          for (int x = 0; x < t.size && cone; ++x)
            cone = std::find(pb.pairs.begin(), pb.pairs.end(),
                             std::pair<int, int>{c1.map[x], c2.map[x]}) != pb.pairs.end();
          if (!cone) continue;
          auto u = pullback_mediate(pb, c1, c2);
          if (!u) {
            p.fail(describe("cone does not factor through the pullback", e));
            continue;
          }
          long count = 0;
          for (const ActHom& w : enumerate_homs(t, pb.act))
            if (compose(q1, w).map == c1.map && compose(q2, w).map == c2.map) ++count;
          if (count != 1) p.fail(describe("pullback mediating map not unique", e));
        }
      }
    }
  }
  return p.r;
}

PropertyResult prop_effective_unions(uint64_t seed, int size_cap) {
  Prop p("independence: effective unions (pushout of a pullback embeds)");
  Rng rng(seed ^ 0x404);
  for (int i = 0; i < 60 * size_cap; ++i) {
    p.tally();
    const auto& e = pick_monoid(rng);
    Act a3 = random_small_act(e.monoid, std::max(3, size_cap), rng);
    auto l1 = random_subact(a3, rng);
    auto l2 = random_subact(a3, rng);
    ActHom g1 = inclusion_hom(a3, l1);
    ActHom g2 = inclusion_hom(a3, l2);
    PullbackResult pb = pullback(g1, g2);
    PushoutResult po = pushout(pb.proj1, pb.proj2);
    auto k = pushout_mediate(po, g1, g2);
    if (!k) {
      p.fail(describe("no mediating map", e));
      continue;
    }
    if (!k->is_mono()) p.fail(describe("pushout does not embed in the corner", e));
  }
  return p.r;
}

PropertyResult prop_type_oracle(uint64_t seed, int size_cap) {
  Prop p("type-calculus: canonical criterion agrees with bijection search");
  Rng rng(seed ^ 0x505);
  for (int i = 0; i < 60 * size_cap; ++i) {
    const auto& e = pick_monoid(rng);
    Act n = random_small_act(e.monoid, std::max(3, size_cap), rng);
    if (n.size == 0) continue;
    auto x = random_subset(n.size, rng);
    int b1 = rng.below(n.size), b2 = rng.below(n.size);
    PointedTypeRep p1 = type_rep(n, {b1}, x);
    PointedTypeRep p2 = type_rep(n, {b2}, x);
    if (p1.core_elements.size() > 5 || p2.core_elements.size() > 5) continue;
    p.tally();
    if (types_equal(p1, p2) != types_equal_bruteforce(p1, p2))
      p.fail(describe("criterion and oracle disagree", e));
  }
  return p.r;
}

PropertyResult prop_type_equivalence(uint64_t seed, int size_cap) {
  Prop p("type-calculus: equality is an equivalence relation; summand-invariant");
  Rng rng(seed ^ 0x606);
  for (int i = 0; i < 40 * size_cap; ++i) {
    p.tally();
    const auto& e = pick_monoid(rng);
    Act n = random_small_act(e.monoid, std::max(2, size_cap), rng);
    if (n.size == 0) continue;
    auto x = random_subset(n.size, rng);
    std::vector<int> picks;
    for (int j = 0; j < 3; ++j) picks.push_back(rng.below(n.size));
    PointedTypeRep reps[3] = {type_rep(n, {picks[0]}, x), type_rep(n, {picks[1]}, x),
                              type_rep(n, {picks[2]}, x)};
    if (!types_equal(reps[0], reps[0])) p.fail(describe("not reflexive", e));
    if (types_equal(reps[0], reps[1]) != types_equal(reps[1], reps[0]))
      p.fail(describe("not symmetric", e));
    if (types_equal(reps[0], reps[1]) && types_equal(reps[1], reps[2]) &&
        !types_equal(reps[0], reps[2]))
      p.fail(describe("not transitive", e));

    Act w = random_small_act(e.monoid, 2, rng);
    Act ext = coproduct(n, w).act;
    PointedTypeRep moved = type_rep(ext, {picks[0]}, x);
    if (!types_equal(reps[0], moved))
      p.fail(describe("type changed under a disjoint summand", e));

    // Restriction chains land where a single restriction does.
    PointedTypeRep over_x = type_rep(n, {picks[0]}, x);
    std::vector<int> x1;
    for (int v : over_x.params)
      if (rng.coin()) x1.push_back(v);
    std::vector<int> x0;
    for (int v : x1)
      if (rng.coin()) x0.push_back(v);
    PointedTypeRep chained = restrict_type(restrict_type(over_x, x1), x0);
    if (!types_equal_witness(chained, restrict_type(over_x, x0)).equal)
      p.fail(describe("restriction chain diverges", e));
  }
  return p.r;
}

PropertyResult prop_independence_axioms(uint64_t seed, int size_cap) {
  Prop p("independence: symmetry, monotonicity, transitivity, existence, search oracle");
  Rng rng(seed ^ 0x707);
  for (int i = 0; i < 60 * size_cap; ++i) {
    p.tally();
    const auto& e = pick_monoid(rng);
    Act b = random_small_act(e.monoid, std::max(3, size_cap), rng);
    auto base = random_subact(b, rng);
    auto x = random_subset(b.size, rng);
    auto y = random_subset(b.size, rng);
    IndependenceQuery q{b, base, x, y};
    IndependenceQuery qs{b, base, y, x};
    bool ind = is_independent(q).independent;
    if (ind != is_independent(qs).independent) p.fail(describe("symmetry breaks", e));
    if (b.size <= 6 && ind != independent_by_subact_search(b, base, x, y))
      p.fail(describe("criterion and subact search disagree", e));
    if (ind) {
      // The construction behind the criterion: SX u A and SY u A witness it.
      auto l1 = set_union_sorted(generated_subact(b, x), base);
      auto l2 = set_union_sorted(generated_subact(b, y), base);
      if (!subset_of(set_intersect_sorted(l1, l2), sorted_unique(base)))
        p.fail(describe("explicit witnesses fail", e));
      auto bigger = generated_subact(b, set_union_sorted(base, random_subset(b.size, rng)));
      if (!is_independent({b, bigger, x, y}).independent)
        p.fail(describe("monotone in the base breaks", e));
      std::vector<int> xsmall;
      for (int v : x)
        if (rng.coin()) xsmall.push_back(v);
      if (!is_independent({b, base, xsmall, y}).independent)
        p.fail(describe("monotone in X breaks", e));
    }
    // Transitivity over nested bases.
    auto bigger = generated_subact(b, set_union_sorted(base, random_subset(b.size, rng)));
    if (is_independent({b, base, x, bigger}).independent &&
        is_independent({b, bigger, x, y}).independent &&
        !is_independent({b, base, x, y}).independent)
      p.fail(describe("transitivity breaks", e));

    // Existence: amalgam squares are independent.
    Act a0 = random_small_act(e.monoid, 2, rng);
    Extension e1 = random_extension(a0, 2, rng);
    Extension e2 = random_extension(a0, 2, rng);
    AmalgamResult am = disjoint_amalgam(e1.embed, e2.embed);
    CommutativeSquare sq{e1.embed, e2.embed, am.f1, am.f2};
    if (!square_is_independent(sq)) p.fail(describe("amalgam square not independent", e));
  }
  return p.r;
}

PropertyResult prop_minimal_base(uint64_t seed, int size_cap) {
  Prop p("independence: minimal base soundness, minimality, degree bound");
  Rng rng(seed ^ 0x808);
  for (int i = 0; i < 40 * size_cap; ++i) {
    const auto& e = pick_monoid(rng);
    Act b = random_small_act(e.monoid, std::max(3, size_cap), rng);
    auto base = random_subact(b, rng);
    std::vector<int> outside;
    for (int v = 0; v < b.size; ++v)
      if (!std::binary_search(base.begin(), base.end(), v)) outside.push_back(v);
    if (outside.empty()) continue;
    p.tally();
    int x = outside[rng.below(static_cast<int>(outside.size()))];
    auto z = minimal_base(b, base, x);
    auto orbit = generated_subact(b, {x});
    auto meet = set_intersect_sorted(base, orbit);
    if (!subset_of(z, meet)) p.fail(describe("base escapes A n Sx", e));
    if (!subset_of(meet, generated_subact(b, z))) p.fail(describe("SZ misses A n Sx", e));
    if (static_cast<int>(z.size()) > generation_degree(*e.monoid))
      p.fail(describe("|Z| exceeds the generation degree", e));
    // Exhaustive minimality at these sizes.
    for (unsigned long mask = 0; mask < (1ul << meet.size()); ++mask) {
      if (__builtin_popcountl(mask) >= static_cast<int>(z.size())) continue;
      std::vector<int> cand;
      for (size_t j = 0; j < meet.size(); ++j)
        if (mask >> j & 1) cand.push_back(meet[j]);
      if (subset_of(meet, generated_subact(b, cand)))
        p.fail(describe("smaller base exists", e));
    }
    auto szv = generated_subact(b, z);
    if (!is_independent({b, szv, orbit, base}).independent)
      p.fail(describe("Sx not independent from A over SZ", e));
  }
  return p.r;
}

PropertyResult prop_merge_uniqueness(uint64_t seed, int size_cap) {
  Prop p("independence: nonforking merge certifies equality over C");
  Rng rng(seed ^ 0x909);
  long produced = 0;
  for (int i = 0; i < 400 * size_cap && produced < 30l * size_cap; ++i) {
    const auto& e = pick_monoid(rng);
    Act c0 = random_small_act(e.monoid, 2, rng);
    Act w = random_small_act(e.monoid, 2, rng);
    Act d = coproduct(coproduct(c0, w).act, w).act;
    int w1base = c0.size, w2base = c0.size + w.size;
    int pick = rng.below(w.size);
    int a1 = w1base + pick, a2 = w2base + pick;
    std::vector<int> cset(c0.size);
    std::iota(cset.begin(), cset.end(), 0);
    auto csub = generated_subact(d, cset);
    auto bsub = random_subact(restrict_to(d, csub), rng);
    std::vector<int> bset;
    for (int li : bsub) bset.push_back(csub[li]);
    MergeOutcome mo = merge_nonforking(d, a1, a2, bset, csub);
    if (mo.status != MergeStatus::ok) continue;
    ++produced;
    p.tally();
    if (!mo.iso || !mo.iso->is_mono() || !mo.iso->is_epi())
      p.fail(describe("merge map is not an isomorphism", e));
    PointedTypeRep pc = type_rep(d, {a1}, csub);
    PointedTypeRep qc = type_rep(d, {a2}, csub);
    if (!types_equal(pc, qc)) p.fail(describe("types differ over C after merge", e));
  }
  return p.r;
}

PropertyResult prop_nonforking_nonsplitting(uint64_t seed, int size_cap) {
  Prop p("independence: nonforking implies nonsplitting");
  Rng rng(seed ^ 0xa0a);
  long produced = 0;
  for (int i = 0; i < 400 * size_cap && produced < 30l * size_cap; ++i) {
    const auto& e = pick_monoid(rng);
    Act n = random_small_act(e.monoid, std::max(3, size_cap), rng);
    if (n.size == 0) continue;
    auto params = random_nonempty_subset(n.size, rng);
    auto px = generated_subact(n, params);
    if (px.size() > 5) continue;
    int bpt = rng.below(n.size);
    PointedTypeRep rep = type_rep(n, {bpt}, params);
    Act px_act = restrict_to(n, px);
    auto msub_local = random_subact(px_act, rng);
    std::vector<int> m;
    for (int li : msub_local) m.push_back(px[li]);
    NonforkingRecord rec = type_nonforking(rep, m);
    if (!rec.verdict) continue;
    ++produced;
    p.tally();
    if (splits_over(rep, m).splits) p.fail(describe("nonforking type splits", e));
  }
  return p.r;
}

PropertyResult prop_injectivity_hierarchy(int size_cap) {
  Prop p("injectivity: n-chain monotone, weakly injective = degree-injective");
  if (size_cap == 0) return p.r;
  for (const auto& e : builtin_catalog()) {
    int g = generation_degree(*e.monoid);
    for (int sz = 0; sz <= std::min(3, size_cap); ++sz)
      for (const Act& q : act_catalog(e.monoid, sz)) {
        p.tally();
        bool weak = is_weakly_injective(q).verdict;
        if (weak != is_n_injective(q, g).verdict)
          p.fail(describe("weak and degree-injective disagree", e));
        for (int n = 1; n < g; ++n)
          if (is_n_injective(q, n + 1).verdict && !is_n_injective(q, n).verdict)
            p.fail(describe("n-injectivity not monotone", e));
        if (is_injective(q).verdict && !weak) p.fail(describe("injective but not weakly", e));
      }
  }
  return p.r;
}

PropertyResult prop_strictness_witness(int size_cap) {
  Prop p("injectivity: witness acts separating 1-injective from 2-injective");
  if (size_cap == 0) return p.r;
  for (const auto& e : builtin_catalog()) {
    bool has2 = false;
    for (const auto& ideal : all_left_ideals(*e.monoid))
      has2 = has2 || ideal.min_generators.size() >= 2;
    if (!has2) continue;
    p.tally();
    bool found = false;
    for (int sz = 1; sz <= 5 && !found; ++sz)
      for (const Act& q : act_catalog(e.monoid, sz)) {
        if (is_n_injective(q, 1).verdict && !is_n_injective(q, 2).verdict) {
          found = true;
          break;
        }
      }
    if (!found) p.fail(describe("no 1-but-not-2-injective act of size <= 5", e));
  }
  return p.r;
}

PropertyResult prop_purity(int size_cap) {
  Prop p("injectivity: purity at bound |S|+2 implies weak injectivity");
  if (size_cap == 0) return p.r;
  for (const auto& e : builtin_catalog()) {
    if (e.monoid->size() > 3 && size_cap < 4) continue;  // keep the default run quick
    for (int sz = 1; sz <= std::min(3, size_cap); ++sz)
      for (const Act& q : act_catalog(e.monoid, sz)) {
        if (is_weakly_injective(q).verdict) {
          // The converse direction is only a reportable observation.
          if (sz <= 2 && !is_absolutely_pure(q, 4).verdict)
            p.finding(describe("weakly injective act not pure at bound 4", e));
          continue;
        }
        p.tally();
        if (is_absolutely_pure(q, e.monoid->size() + 2).verdict)
          p.fail(describe("pure at |S|+2 but not weakly injective", e));
      }
  }
  return p.r;
}

PropertyResult prop_cellular(uint64_t seed, int size_cap) {
  Prop p("saturation: cellular chains verify step by step");
  Rng rng(seed ^ 0xb0b);
  for (int i = 0; i < 30 * size_cap; ++i) {
    p.tally();
    const auto& e = pick_monoid(rng);
    Act k = random_small_act(e.monoid, 2, rng);
    Extension ext = random_extension(k, 3, rng);
    CellularChain chain = cellular_factorize(ext.embed);
    std::string why;
    if (!verify_chain(chain, ext.embed, &why)) p.fail(describe(why, e));
  }
  return p.r;
}

PropertyResult prop_som(int size_cap) {
  Prop p("saturation: one step restores every missing extension; leg embeds");
  if (size_cap == 0) return p.r;
  const auto& cat = builtin_catalog();
  for (const auto& e : {cat[0], cat[1], cat[5], cat[11]}) {
    for (int sz = 0; sz <= 2; ++sz)
      for (const Act& k : act_catalog(e.monoid, sz)) {
        p.tally();
        SomResult sr = som_step(k);
        if (!sr.leg.is_mono()) p.fail(describe("step leg not injective", e));
        for (const Act& b : cyclic_acts(e.monoid))
          for (const auto& a : all_subacts(b)) {
            Act a_act = restrict_to(b, a);
            for (const ActHom& u : enumerate_homs(a_act, k)) {
              std::map<int, int> cons;
              for (size_t j = 0; j < a.size(); ++j) cons[a[j]] = sr.leg.map[u.map[j]];
              if (!find_hom(b, sr.act, cons))
                p.fail(describe("hom still fails to extend after the step", e));
            }
          }
      }
  }
  return p.r;
}

PropertyResult prop_saturate(uint64_t seed, int size_cap) {
  Prop p("saturation: reached targets verify; liftings exist");
  if (size_cap == 0) return p.r;
  const auto& rzero2_entry = builtin_catalog()[5];
  Rng rng(seed ^ 0xc0c);
  for (int sz = 0; sz <= 2; ++sz)
    for (const Act& k : act_catalog(rzero2_entry.monoid, sz)) {
      p.tally();
      SaturationResult res = saturate(k, 8, false);
      if (res.status != SatStatus::reached) {
        p.fail(describe("saturation did not reach weak injectivity", rzero2_entry));
        continue;
      }
      if (!res.embedding.is_mono()) p.fail(describe("embedding not injective", rzero2_entry));
      if (!is_weakly_injective(res.result).verdict)
        p.fail(describe("result fails the weak injectivity test", rzero2_entry));
      for (const Extension& ext : nonextendable_cell_extensions(k, 2)) {
        std::map<int, int> cons;
        for (int x = 0; x < k.size; ++x) cons[ext.embed.map[x]] = res.embedding.map[x];
        if (!find_mono(ext.bigger, res.result, cons))
          p.fail(describe("no commuting mono from a cellular extension", rzero2_entry));
      }
      // Unrestricted extensions are only observed: a skipped cell leaves no
      // fresh copy in the saturation to receive them injectively.
      for (int t = 0; t < 2; ++t) {
        Extension ext = random_extension(k, 2, rng);
        std::map<int, int> cons;
        for (int x = 0; x < k.size; ++x) cons[ext.embed.map[x]] = res.embedding.map[x];
        if (!find_mono(ext.bigger, res.result, cons))
          p.finding(describe("free-form extension does not lift", rzero2_entry));
      }
    }
  return p.r;
}

PropertyResult prop_dichotomy(int size_cap) {
  Prop p("injectivity: coproducts of injectives fail only without right reversibility");
  if (size_cap == 0) return p.r;
  for (const auto& e : builtin_catalog()) {
    if (e.monoid->size() > 4) continue;
    p.tally();
    DichotomyScan scan = dichotomy_scan(e.monoid, std::min(3, size_cap));
    if (scan.violation) p.fail(describe("failure on a right-reversible monoid", e));
    if (e.name == "rzero2" && scan.coproduct_failures == 0)
      p.fail("expected a coproduct failure over rzero2");
  }
  return p.r;
}

}  // namespace

std::vector<PropertyResult> run_selftest(uint64_t seed, int size_cap) {
  std::vector<PropertyResult> out;
  out.push_back(prop_monoid_invariants(size_cap));
  out.push_back(prop_closure_operator(seed, size_cap));
  out.push_back(prop_mono_epi_cancellation(size_cap));
  out.push_back(prop_pushout_pullback_stability(seed, size_cap));
  out.push_back(prop_universal_properties(seed, size_cap));
  out.push_back(prop_effective_unions(seed, size_cap));
  out.push_back(prop_type_oracle(seed, size_cap));
  out.push_back(prop_type_equivalence(seed, size_cap));
  out.push_back(prop_independence_axioms(seed, size_cap));
  out.push_back(prop_minimal_base(seed, size_cap));
  out.push_back(prop_merge_uniqueness(seed, size_cap));
  out.push_back(prop_nonforking_nonsplitting(seed, size_cap));
  out.push_back(prop_injectivity_hierarchy(size_cap));
  out.push_back(prop_strictness_witness(size_cap));
  out.push_back(prop_purity(size_cap));
  out.push_back(prop_cellular(seed, size_cap));
  out.push_back(prop_som(size_cap));
  out.push_back(prop_saturate(seed, size_cap));
  out.push_back(prop_dichotomy(size_cap));
  return out;
}

}  // namespace actwb
