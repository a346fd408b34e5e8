#include "actwb/act.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace actwb {

Act validate_act(MonoidPtr m, const std::vector<std::vector<int>>& rows) {
  const int n = m->size();
  if (static_cast<int>(rows.size()) != n)
    throw WorkbenchError(Errc::malformed_table,
                         "expected " + std::to_string(n) + " action rows, got " +
                             std::to_string(rows.size()));
  const int sz = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * sz);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != sz)
      throw WorkbenchError(Errc::malformed_table, "ragged action table");
    for (int v : row) {
      if (v < 0 || v >= sz)
        throw WorkbenchError(Errc::malformed_table, "action entry out of range", {v});
      flat.push_back(v);
    }
  }
  Act a{std::move(m), sz, std::move(flat)};
  for (int x = 0; x < sz; ++x)
    if (a.act(0, x) != x)
      throw WorkbenchError(Errc::unit_law, "1*x != x at x=" + std::to_string(x), {x});
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int x = 0; x < sz; ++x)
        if (a.act(s, a.act(t, x)) != a.act(a.monoid->mul(s, t), x))
          throw WorkbenchError(Errc::act_associativity,
                               "s(t x) != (st)x at (" + std::to_string(s) + "," +
                                   std::to_string(t) + "," + std::to_string(x) + ")",
                               {s, t, x});
  return a;
}

Act self_act(MonoidPtr m) {
  const int n = m->size();
  Act a{m, n, m->table()};
  return a;
}

Act empty_act(MonoidPtr m) { return Act{std::move(m), 0, {}}; }

Act singleton_act(MonoidPtr m) {
  const int n = m->size();
  return Act{std::move(m), 1, std::vector<int>(n, 0)};
}

bool same_monoid(const Act& a, const Act& b) {
  return a.monoid == b.monoid || same_monoid(*a.monoid, *b.monoid);
}

bool acts_equal(const Act& a, const Act& b) {
  return same_monoid(a, b) && a.size == b.size && a.action == b.action;
}

bool is_equivariant(const Act& src, const Act& tgt, const std::vector<int>& map) {
  for (int s = 0; s < src.msize(); ++s)
    for (int x = 0; x < src.size; ++x)
      if (map[src.act(s, x)] != tgt.act(s, map[x])) return false;
  return true;
}

bool ActHom::is_mono() const {
  std::vector<char> seen(target.size, 0);
  for (int v : map) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool ActHom::is_epi() const {
  std::vector<char> seen(target.size, 0);
  for (int v : map) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

ActHom ActHom::checked(Act src, Act tgt, std::vector<int> map) {
  if (!same_monoid(src, tgt))
    throw WorkbenchError(Errc::monoid_mismatch, "hom endpoints over different monoids");
  if (static_cast<int>(map.size()) != src.size)
    throw WorkbenchError(Errc::shape_mismatch, "map length does not match source carrier");
  for (int v : map)
    if (v < 0 || v >= tgt.size)
      throw WorkbenchError(Errc::index_out_of_range, "map value out of target range", {v});
  if (!is_equivariant(src, tgt, map))
    throw WorkbenchError(Errc::not_equivariant, "map does not commute with the action");
  return ActHom{std::move(src), std::move(tgt), std::move(map)};
}

ActHom ActHom::trusted(Act src, Act tgt, std::vector<int> map) {
  return ActHom{std::move(src), std::move(tgt), std::move(map)};
}

ActHom identity_hom(const Act& a) {
  std::vector<int> id(a.size);
  std::iota(id.begin(), id.end(), 0);
  return ActHom::trusted(a, a, std::move(id));
}

ActHom compose(const ActHom& g, const ActHom& f) {
  if (!acts_equal(g.source, f.target))
    throw WorkbenchError(Errc::shape_mismatch, "composition endpoints do not match");
  std::vector<int> map(f.source.size);
  for (int x = 0; x < f.source.size; ++x) map[x] = g.map[f.map[x]];
  return ActHom::trusted(f.source, g.target, std::move(map));
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> set_union_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_difference_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> generated_subact(const Act& a, const std::vector<int>& xs) {
  std::vector<char> in(a.size, 0);
  for (int x : xs) {
    if (x < 0 || x >= a.size)
      throw WorkbenchError(Errc::index_out_of_range, "generator " + std::to_string(x), {x});
    for (int s = 0; s < a.msize(); ++s) in[a.act(s, x)] = 1;
  }
  std::vector<int> out;
  for (int x = 0; x < a.size; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

bool is_subact(const Act& a, const std::vector<int>& elems) {
  std::vector<char> in(a.size, 0);
  for (int x : elems) {
    if (x < 0 || x >= a.size) return false;
    in[x] = 1;
  }
  for (int x : elems)
    for (int s = 0; s < a.msize(); ++s)
      if (!in[a.act(s, x)]) return false;
  return true;
}

Act restrict_to(const Act& a, const std::vector<int>& elems) {
  std::vector<int> pos(a.size, -1);
  for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  const int sz = static_cast<int>(elems.size());
  std::vector<int> action(static_cast<size_t>(a.msize()) * sz);
  for (int s = 0; s < a.msize(); ++s)
    for (int i = 0; i < sz; ++i) {
      int img = a.act(s, elems[i]);
      if (pos[img] < 0)
        throw WorkbenchError(Errc::base_not_subact, "subset not closed under the action", {elems[i], s});
      action[static_cast<size_t>(s) * sz + i] = pos[img];
    }
  return Act{a.monoid, sz, std::move(action)};
}

ActHom inclusion_hom(const Act& a, const std::vector<int>& elems) {
  Act sub = restrict_to(a, elems);
  return ActHom::trusted(sub, a, elems);
}

std::vector<int> min_generating_subact_set(const Act& a, const std::vector<int>& elems) {
  if (elems.empty()) return {};
  const int k = static_cast<int>(elems.size());
  for (int card = 1; card <= k; ++card) {
    std::vector<int> idx(card);
    for (int i = 0; i < card; ++i) idx[i] = i;
    while (true) {
      std::vector<int> gens(card);
      for (int i = 0; i < card; ++i) gens[i] = elems[idx[i]];
      if (generated_subact(a, gens) == elems) return gens;
      int i = card - 1;
      while (i >= 0 && idx[i] == k - card + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return elems;
}

CoproductResult coproduct(const Act& a, const Act& b) {
  if (!same_monoid(a, b))
    throw WorkbenchError(Errc::monoid_mismatch, "coproduct of acts over different monoids");
  const int n = a.msize();
  const int sz = a.size + b.size;
  std::vector<int> action(static_cast<size_t>(n) * sz);
  for (int s = 0; s < n; ++s) {
    for (int x = 0; x < a.size; ++x) action[static_cast<size_t>(s) * sz + x] = a.act(s, x);
    for (int y = 0; y < b.size; ++y)
      action[static_cast<size_t>(s) * sz + a.size + y] = a.size + b.act(s, y);
  }
  Act c{a.monoid, sz, std::move(action)};
  std::vector<int> m1(a.size), m2(b.size);
  std::iota(m1.begin(), m1.end(), 0);
  std::iota(m2.begin(), m2.end(), a.size);
  return CoproductResult{c, ActHom::trusted(a, c, std::move(m1)), ActHom::trusted(b, c, std::move(m2))};
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

// Quotient of `a` by the classes of `uf`, labeled by least class member.
// Assumes the relation is an act congruence.
struct QuotientBuild {
  Act act;
  std::vector<int> cls;  // carrier index -> class index
};

QuotientBuild quotient_by(const Act& a, UnionFind& uf) {
  std::vector<int> root_to_class(a.size, -1);
  std::vector<int> reps;
  for (int x = 0; x < a.size; ++x) {
    int r = uf.find(x);
    if (root_to_class[r] < 0) {
      root_to_class[r] = static_cast<int>(reps.size());
      reps.push_back(x);  // roots are least members: unions keep the minimum
    }
  }
  std::vector<int> cls(a.size);
  for (int x = 0; x < a.size; ++x) cls[x] = root_to_class[uf.find(x)];
  const int q = static_cast<int>(reps.size());
  std::vector<int> action(static_cast<size_t>(a.msize()) * q);
  for (int s = 0; s < a.msize(); ++s)
    for (int c = 0; c < q; ++c) action[static_cast<size_t>(s) * q + c] = cls[a.act(s, reps[c])];
  return QuotientBuild{Act{a.monoid, q, std::move(action)}, std::move(cls)};
}

}  // namespace

PushoutResult pushout(const ActHom& f1, const ActHom& f2) {
  if (!acts_equal(f1.source, f2.source))
    throw WorkbenchError(Errc::source_mismatch, "pushout legs do not share a source");
  CoproductResult cp = coproduct(f1.target, f2.target);
  UnionFind uf(cp.act.size);
  for (int x = 0; x < f1.source.size; ++x) uf.unite(f1.map[x], f1.target.size + f2.map[x]);
  QuotientBuild qb = quotient_by(cp.act, uf);
  std::vector<int> l1(f1.target.size), l2(f2.target.size);
  for (int x = 0; x < f1.target.size; ++x) l1[x] = qb.cls[x];
  for (int y = 0; y < f2.target.size; ++y) l2[y] = qb.cls[f1.target.size + y];
  return PushoutResult{qb.act, ActHom::trusted(f1.target, qb.act, std::move(l1)),
                       ActHom::trusted(f2.target, qb.act, std::move(l2))};
}

PullbackResult pullback(const ActHom& g1, const ActHom& g2) {
  if (!acts_equal(g1.target, g2.target))
    throw WorkbenchError(Errc::target_mismatch, "pullback legs do not share a target");
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> idx(static_cast<size_t>(g1.source.size) * std::max(g2.source.size, 1), -1);
  for (int x = 0; x < g1.source.size; ++x)
    for (int y = 0; y < g2.source.size; ++y)
      if (g1.map[x] == g2.map[y]) {
        idx[static_cast<size_t>(x) * g2.source.size + y] = static_cast<int>(pairs.size());
        pairs.emplace_back(x, y);
      }
  const int sz = static_cast<int>(pairs.size());
  const int n = g1.source.msize();
  std::vector<int> action(static_cast<size_t>(n) * sz);
  for (int s = 0; s < n; ++s)
    for (int p = 0; p < sz; ++p) {
      int x = g1.source.act(s, pairs[p].first);
      int y = g2.source.act(s, pairs[p].second);
      action[static_cast<size_t>(s) * sz + p] = idx[static_cast<size_t>(x) * g2.source.size + y];
    }
  Act pb{g1.source.monoid, sz, std::move(action)};
  std::vector<int> p1(sz), p2(sz);
  for (int p = 0; p < sz; ++p) {
    p1[p] = pairs[p].first;
    p2[p] = pairs[p].second;
  }
  return PullbackResult{pb, ActHom::trusted(pb, g1.source, std::move(p1)),
                        ActHom::trusted(pb, g2.source, std::move(p2)), std::move(pairs)};
}

EqualizerResult equalizer(const ActHom& f, const ActHom& g) {
  if (!acts_equal(f.source, g.source) || !acts_equal(f.target, g.target))
    throw WorkbenchError(Errc::shape_mismatch, "equalizer of a non-parallel pair");
  std::vector<int> elems;
  for (int x = 0; x < f.source.size; ++x)
    if (f.map[x] == g.map[x]) elems.push_back(x);
  return EqualizerResult{restrict_to(f.source, elems), inclusion_hom(f.source, elems)};
}

CoequalizerResult coequalizer(const ActHom& f, const ActHom& g) {
  if (!acts_equal(f.source, g.source) || !acts_equal(f.target, g.target))
    throw WorkbenchError(Errc::shape_mismatch, "coequalizer of a non-parallel pair");
  UnionFind uf(f.target.size);
  for (int x = 0; x < f.source.size; ++x) uf.unite(f.map[x], g.map[x]);
  QuotientBuild qb = quotient_by(f.target, uf);
  return CoequalizerResult{qb.act, ActHom::trusted(f.target, qb.act, qb.cls)};
}

Factorization epi_mono_factorize(const ActHom& h) {
  std::vector<int> image = sorted_unique(h.map);
  Act c = restrict_to(h.target, image);
  std::vector<int> pos(h.target.size, -1);
  for (size_t i = 0; i < image.size(); ++i) pos[image[i]] = static_cast<int>(i);
  std::vector<int> e(h.source.size);
  for (int x = 0; x < h.source.size; ++x) e[x] = pos[h.map[x]];
  return Factorization{c, ActHom::trusted(h.source, c, std::move(e)),
                       inclusion_hom(h.target, image)};
}

AmalgamResult disjoint_amalgam(const ActHom& i1, const ActHom& i2) {
  if (!i1.is_mono()) throw WorkbenchError(Errc::not_mono, "first amalgam leg is not injective");
  if (!i2.is_mono()) throw WorkbenchError(Errc::not_mono, "second amalgam leg is not injective");
  PushoutResult po = pushout(i1, i2);
  return AmalgamResult{po.act, po.leg1, po.leg2};
}

bool square_commutes(const CommutativeSquare& sq) {
  if (!acts_equal(sq.f1.source, sq.f2.source)) return false;
  if (!acts_equal(sq.g1.source, sq.f1.target)) return false;
  if (!acts_equal(sq.g2.source, sq.f2.target)) return false;
  if (!acts_equal(sq.g1.target, sq.g2.target)) return false;
  for (int x = 0; x < sq.f1.source.size; ++x)
    if (sq.g1.map[sq.f1.map[x]] != sq.g2.map[sq.f2.map[x]]) return false;
  return true;
}

std::optional<ActHom> pushout_mediate(const PushoutResult& po, const ActHom& g1,
                                      const ActHom& g2) {
  if (!acts_equal(g1.target, g2.target)) return std::nullopt;
  std::vector<int> u(po.act.size, -1);
  auto assign = [&](int cls, int val) {
    if (u[cls] >= 0 && u[cls] != val) return false;
    u[cls] = val;
    return true;
  };
  for (int x = 0; x < g1.source.size; ++x)
    if (!assign(po.leg1.map[x], g1.map[x])) return std::nullopt;
  for (int y = 0; y < g2.source.size; ++y)
    if (!assign(po.leg2.map[y], g2.map[y])) return std::nullopt;
  for (int v : u)
    if (v < 0) return std::nullopt;  // pushout carriers are covered by the legs
  if (!is_equivariant(po.act, g1.target, u)) return std::nullopt;
  return ActHom::trusted(po.act, g1.target, std::move(u));
}

std::optional<ActHom> pullback_mediate(const PullbackResult& pb, const ActHom& h1,
                                       const ActHom& h2) {
  if (!acts_equal(h1.source, h2.source)) return std::nullopt;
  std::map<std::pair<int, int>, int> where;
  for (size_t p = 0; p < pb.pairs.size(); ++p) where[pb.pairs[p]] = static_cast<int>(p);
  std::vector<int> u(h1.source.size);
  for (int t = 0; t < h1.source.size; ++t) {
    auto it = where.find({h1.map[t], h2.map[t]});
    if (it == where.end()) return std::nullopt;
    u[t] = it->second;
  }
  if (!is_equivariant(h1.source, pb.act, u)) return std::nullopt;
  return ActHom::trusted(h1.source, pb.act, std::move(u));
}

}  // namespace actwb
