#include "actwb/gen.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "actwb/enumerate.hpp"

namespace actwb {

namespace {

std::vector<int> identity_tr(int sz) {
  std::vector<int> id(sz);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

std::vector<int> compose_tr(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> h(g.size());
  for (size_t x = 0; x < g.size(); ++x) h[x] = f[g[x]];
  return h;
}

struct RandomActSearch {
  const Monoid& m;
  int sz;
  Rng& rng;
  std::vector<char> assigned;
  std::vector<std::vector<int>> maps;
  bool done = false;

  RandomActSearch(const Monoid& m_, int sz_, Rng& rng_)
      : m(m_), sz(sz_), rng(rng_), assigned(m_.size(), 0), maps(m_.size()) {
    assigned[0] = 1;
    maps[0] = identity_tr(sz);
  }

  bool place(int e, const std::vector<int>& t, std::vector<int>& trail) {
    std::vector<std::pair<int, std::vector<int>>> work{{e, t}};
    while (!work.empty()) {
      auto [ce, ct] = work.back();
      work.pop_back();
      if (assigned[ce]) {
        if (maps[ce] != ct) return false;
        continue;
      }
      assigned[ce] = 1;
      maps[ce] = ct;
      trail.push_back(ce);
      for (int o = 0; o < m.size(); ++o) {
        if (!assigned[o]) continue;
        work.emplace_back(m.mul(ce, o), compose_tr(ct, maps[o]));
        work.emplace_back(m.mul(o, ce), compose_tr(maps[o], ct));
      }
    }
    return true;
  }

  void run(int from) {
    if (done) return;
    int e = from;
    while (e < m.size() && assigned[e]) ++e;
    if (e == m.size()) {
      done = true;
      return;
    }
    // Scan all transformations from a random offset via lex successor; no
    // materialized candidate list.
    long total = 1;
    for (int i = 0; i < sz; ++i) total *= sz;
    long offset = static_cast<long>(rng.next() % static_cast<uint64_t>(total));
    std::vector<int> t(sz);
    long rem = offset;
    for (int i = sz - 1; i >= 0; --i) {
      t[i] = static_cast<int>(rem % sz);
      rem /= sz;
    }
    std::vector<int> trail;
    for (long step = 0; step < total && !done; ++step) {
      if (place(e, t, trail)) run(e + 1);
      if (done) return;
      undo(trail);
      int i = sz - 1;
      while (i >= 0 && t[i] == sz - 1) t[i--] = 0;
      if (i < 0) i = sz - 1;  // wrapped around to 0...0
      else ++t[i];
    }
  }

  void undo(std::vector<int>& trail) {
    for (int x : trail) assigned[x] = 0;
    trail.clear();
  }
};

}  // namespace

Act random_act(const MonoidPtr& m, int sz, Rng& rng) {
  if (sz == 0) return empty_act(m);
  RandomActSearch s(*m, sz, rng);
  s.run(1);
  std::vector<int> action(static_cast<size_t>(m->size()) * sz);
  for (int e = 0; e < m->size(); ++e)
    for (int x = 0; x < sz; ++x) action[static_cast<size_t>(e) * sz + x] = s.maps[e][x];
  return Act{m, sz, std::move(action)};
}

std::vector<int> random_subset(int m, Rng& rng) {
  std::vector<int> out;
  for (int x = 0; x < m; ++x)
    if (rng.coin()) out.push_back(x);
  return out;
}

std::vector<int> random_nonempty_subset(int m, Rng& rng) {
  if (m == 0) return {};
  std::vector<int> out = random_subset(m, rng);
  if (out.empty()) out.push_back(rng.below(m));
  return out;
}

std::vector<int> random_subact(const Act& a, Rng& rng) {
  return generated_subact(a, random_subset(a.size, rng));
}

Extension attach_cell(const Act& l, const Act& b, const std::vector<int>& a_elems,
                      const std::vector<int>& u) {
  Act a_act = restrict_to(b, a_elems);
  ActHom incl = ActHom::trusted(a_act, b, a_elems);
  PushoutResult po = pushout(incl, ActHom::trusted(a_act, l, u));
  return Extension{po.act, po.leg2};
}

Extension random_extension(const Act& k, int extra_cap, Rng& rng) {
  if (extra_cap > 0 && rng.coin()) {
    Act w = random_act(k.monoid, 1 + rng.below(extra_cap), rng);
    CoproductResult cp = coproduct(k, w);
    return Extension{cp.act, cp.inj1};
  }
  // Glue one cell: a cyclic act B along a subact A mapped into K, keeping at
  // most extra_cap fresh elements.
  std::vector<Act> cyclics = cyclic_acts(k.monoid);
  for (int attempt = 0; attempt < 32; ++attempt) {
    const Act& b = cyclics[rng.below(static_cast<int>(cyclics.size()))];
    auto subs = all_subacts(b);
    const auto& a_elems = subs[rng.below(static_cast<int>(subs.size()))];
    if (b.size - static_cast<int>(a_elems.size()) > extra_cap) continue;
    Act a_act = restrict_to(b, a_elems);
    auto homs = enumerate_homs(a_act, k);
    if (homs.empty()) continue;
    const ActHom& u = homs[rng.below(static_cast<int>(homs.size()))];
    Extension ext = attach_cell(k, b, a_elems, u.map);
    if (!ext.embed.is_mono()) continue;
    return ext;
  }
  return Extension{k, identity_hom(k)};
}

namespace {

// Cells (B, A, u) with u: A -> L not extendable to B -> L, adding at most
// max_fresh elements.
std::vector<Extension> one_step_cells(const Act& l, int max_fresh) {
  std::vector<Extension> out;
  for (const Act& b : cyclic_acts(l.monoid))
    for (const auto& a_elems : all_subacts(b)) {
      if (b.size - static_cast<int>(a_elems.size()) > max_fresh) continue;
      if (b.size == static_cast<int>(a_elems.size())) continue;
      Act a_act = restrict_to(b, a_elems);
      for (const ActHom& u : enumerate_homs(a_act, l)) {
        std::map<int, int> cons;
        for (size_t i = 0; i < a_elems.size(); ++i) cons[a_elems[i]] = u.map[i];
        if (find_hom(b, l, cons)) continue;
        out.push_back(attach_cell(l, b, a_elems, u.map));
      }
    }
  return out;
}

}  // namespace

std::vector<Extension> nonextendable_cell_extensions(const Act& k, int max_fresh) {
  std::vector<Extension> out;
  out.push_back(Extension{k, identity_hom(k)});
  for (Extension& e1 : one_step_cells(k, max_fresh)) {
    int fresh1 = e1.bigger.size - k.size;
    for (Extension& e2 : one_step_cells(e1.bigger, max_fresh - fresh1))
      out.push_back(Extension{e2.bigger, compose(e2.embed, e1.embed)});
    out.push_back(std::move(e1));
  }
  return out;
}

}  // namespace actwb
