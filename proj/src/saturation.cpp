#include "actwb/saturation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "actwb/enumerate.hpp"
#include "actwb/injectivity.hpp"

namespace actwb {

bool is_pushout_square(const CommutativeSquare& sq) {
  if (!square_commutes(sq)) return false;
  PushoutResult po = pushout(sq.f1, sq.f2);
  auto u = pushout_mediate(po, sq.g1, sq.g2);
  return u && u->is_mono() && u->is_epi();
}

CellularChain cellular_factorize(const ActHom& f) {
  if (!f.is_mono()) throw WorkbenchError(Errc::not_mono, "cellular factorization needs a mono");
  const Act& l = f.target;
  CellularChain chain;
  std::vector<int> cur = sorted_unique(f.map);
  std::vector<int> full(l.size);
  std::iota(full.begin(), full.end(), 0);

  while (static_cast<int>(cur.size()) < l.size) {
    std::vector<int> rest = set_difference_sorted(full, cur);
    int a = rest.front();
    std::vector<int> b_elems = generated_subact(l, {a});
    std::vector<int> a_elems = set_intersect_sorted(cur, b_elems);
    std::vector<int> next = set_union_sorted(cur, b_elems);

    Act a_act = restrict_to(l, a_elems);
    Act b_act = restrict_to(l, b_elems);
    Act k_act = restrict_to(l, cur);
    Act k1_act = restrict_to(l, next);

    auto pos_in = [](const std::vector<int>& elems, int amb) {
      return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), amb) - elems.begin());
    };
    std::vector<int> f1(a_elems.size()), f2(a_elems.size());
    for (size_t i = 0; i < a_elems.size(); ++i) {
      f1[i] = pos_in(b_elems, a_elems[i]);
      f2[i] = pos_in(cur, a_elems[i]);
    }
    std::vector<int> g1(b_elems.size()), g2(cur.size());
    for (size_t i = 0; i < b_elems.size(); ++i) g1[i] = pos_in(next, b_elems[i]);
    for (size_t i = 0; i < cur.size(); ++i) g2[i] = pos_in(next, cur[i]);

    CellularStep step;
    step.cyclic_target = b_act;
    step.attaching_subact = f1;
    step.attaching_hom = ActHom::trusted(a_act, k_act, f2);
    step.square = CommutativeSquare{ActHom::trusted(a_act, b_act, f1),
                                    ActHom::trusted(a_act, k_act, f2),
                                    ActHom::trusted(b_act, k1_act, g1),
                                    ActHom::trusted(k_act, k1_act, g2)};
    chain.steps.push_back(std::move(step));
    cur = std::move(next);
  }

  // cur == full carrier, so the final stage act is L with identity labels.
  chain.composite = ActHom::trusted(f.source, restrict_to(l, full), f.map);
  return chain;
}

bool verify_chain(const CellularChain& chain, const ActHom& f, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  ActHom stage = [&] {
    std::vector<int> img = sorted_unique(f.map);
    Act k0 = restrict_to(f.target, img);
    std::vector<int> pos(f.target.size, -1);
    for (size_t i = 0; i < img.size(); ++i) pos[img[i]] = static_cast<int>(i);
    std::vector<int> e0(f.source.size);
    for (int x = 0; x < f.source.size; ++x) e0[x] = pos[f.map[x]];
    return ActHom::trusted(f.source, k0, e0);
  }();
  if (!f.is_mono()) return fail("input is not a mono");
  for (size_t i = 0; i < chain.steps.size(); ++i) {
    const CellularStep& st = chain.steps[i];
    if (!is_cyclic(st.cyclic_target)) return fail("step " + std::to_string(i) + ": target not cyclic");
    if (!acts_equal(st.cyclic_target, st.square.f1.target))
      return fail("step " + std::to_string(i) + ": recorded target differs from the square");
    if (st.attaching_hom.map != st.square.f2.map ||
        !acts_equal(st.attaching_hom.source, st.square.f2.source))
      return fail("step " + std::to_string(i) + ": recorded attaching hom differs from the square");
    if (!acts_equal(st.square.g2.source, stage.target))
      return fail("step " + std::to_string(i) + ": stage mismatch");
    if (!st.square.g2.is_mono() || !st.square.g1.is_mono())
      return fail("step " + std::to_string(i) + ": step legs not mono");
    if (!is_pushout_square(st.square)) return fail("step " + std::to_string(i) + ": not a pushout");
    stage = compose(st.square.g2, stage);
  }
  if (!acts_equal(stage.target, chain.composite.target) || stage.map != chain.composite.map)
    return fail("composite does not match the chain");
  if (stage.target.size != f.target.size) return fail("chain does not reach the target");
  // The final stage is the target up to the stage relabeling, which for the
  // factorization above is the identity.
  if (!acts_equal(stage.target, f.target)) return fail("final stage differs from the target");
  if (stage.map != f.map) return fail("composite differs from the input mono");
  return true;
}

SomResult som_step(const Act& k) {
  struct Cell {
    const Act* b;
    std::vector<int> a_elems;  // local to B
    std::vector<int> hom;      // A -> K values, aligned with a_elems
  };
  std::vector<Act> cyclics = cyclic_acts(k.monoid);
  std::vector<Cell> cells;
  for (const Act& b : cyclics) {
    for (const std::vector<int>& a : all_subacts(b)) {
      Act a_act = restrict_to(b, a);
      for (const ActHom& u : enumerate_homs(a_act, k)) {
        std::map<int, int> constraints;
        for (size_t i = 0; i < a.size(); ++i) constraints[a[i]] = u.map[i];
        if (!find_hom(b, k, constraints)) cells.push_back(Cell{&b, a, u.map});
      }
    }
  }

  int fresh = k.size;
  std::vector<std::vector<int>> embed(cells.size());  // B local index -> K1 index
  for (size_t c = 0; c < cells.size(); ++c) {
    const Cell& cell = cells[c];
    embed[c].assign(cell.b->size, -1);
    for (size_t i = 0; i < cell.a_elems.size(); ++i) embed[c][cell.a_elems[i]] = cell.hom[i];
    for (int x = 0; x < cell.b->size; ++x)
      if (embed[c][x] < 0) embed[c][x] = fresh++;
  }

  const int n = k.msize();
  std::vector<int> action(static_cast<size_t>(n) * fresh);
  for (int s = 0; s < n; ++s)
    for (int x = 0; x < k.size; ++x) action[static_cast<size_t>(s) * fresh + x] = k.act(s, x);
  for (size_t c = 0; c < cells.size(); ++c) {
    const Cell& cell = cells[c];
    for (int x = 0; x < cell.b->size; ++x) {
      if (embed[c][x] < k.size) continue;  // glued into K, action already set
      for (int s = 0; s < n; ++s)
        action[static_cast<size_t>(s) * fresh + embed[c][x]] = embed[c][cell.b->act(s, x)];
    }
  }
  Act k1{k.monoid, fresh, std::move(action)};
  std::vector<int> leg(k.size);
  std::iota(leg.begin(), leg.end(), 0);
  return SomResult{k1, ActHom::trusted(k, k1, std::move(leg)),
                   static_cast<long>(cells.size())};
}

SaturationResult saturate(const Act& k, int max_steps, bool target_full, int size_cap) {
  if (max_steps < 1)
    throw WorkbenchError(Errc::index_out_of_range, "max_steps must be positive", {max_steps});
  SaturationResult res;
  res.result = k;
  res.embedding = identity_hom(k);
  auto satisfied = [&](const Act& q) {
    return target_full ? is_injective(q).verdict : is_weakly_injective(q).verdict;
  };
  if (satisfied(k)) {
    res.status = SatStatus::reached;
    res.steps = 0;
    return res;
  }
  for (int step = 1; step <= max_steps; ++step) {
    SomResult sr = som_step(res.result);
    res.embedding = compose(sr.leg, res.embedding);
    res.result = sr.act;
    res.steps = step;
    if (res.result.size > size_cap) {
      res.status = SatStatus::cap_exceeded;
      return res;
    }
    if (satisfied(res.result)) {
      res.status = SatStatus::reached;
      return res;
    }
  }
  res.status = SatStatus::cap_exceeded;
  return res;
}

}  // namespace actwb
