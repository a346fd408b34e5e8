#include "actwb/independence.hpp"

#include <algorithm>
#include <map>

#include "actwb/enumerate.hpp"

namespace actwb {

bool square_is_independent(const CommutativeSquare& sq) {
  for (const ActHom* h : {&sq.f1, &sq.f2, &sq.g1, &sq.g2})
    if (!h->is_mono()) throw WorkbenchError(Errc::not_mono, "square leg is not injective");
  if (!square_commutes(sq)) throw WorkbenchError(Errc::not_commutative, "square does not commute");
  std::vector<int> im1 = sorted_unique(sq.g1.map);
  std::vector<int> im2 = sorted_unique(sq.g2.map);
  std::vector<int> im0;
  for (int x = 0; x < sq.f1.source.size; ++x) im0.push_back(sq.g1.map[sq.f1.map[x]]);
  return set_intersect_sorted(im1, im2) == sorted_unique(im0);
}

IndependenceVerdict is_independent(const IndependenceQuery& q) {
  if (!is_subact(q.ambient, q.base))
    throw WorkbenchError(Errc::base_not_subact, "base is not a subact of the ambient act");
  std::vector<int> sx = generated_subact(q.ambient, q.left);
  std::vector<int> sy = generated_subact(q.ambient, q.right);
  std::vector<int> meet = set_intersect_sorted(sx, sy);
  IndependenceVerdict v;
  v.witness = set_difference_sorted(meet, sorted_unique(q.base));
  v.independent = v.witness.empty();
  return v;
}

std::vector<int> minimal_base(const Act& b, const std::vector<int>& a, int x) {
  if (x < 0 || x >= b.size)
    throw WorkbenchError(Errc::index_out_of_range, "element " + std::to_string(x), {x});
  std::vector<int> base = sorted_unique(a);
  if (std::binary_search(base.begin(), base.end(), x))
    throw WorkbenchError(Errc::element_in_base, "element " + std::to_string(x) + " lies in the base",
                         {x});
  if (!is_subact(b, base))
    throw WorkbenchError(Errc::base_not_subact, "base is not a subact of the ambient act");
  std::vector<int> orbit = generated_subact(b, {x});
  std::vector<int> y = set_intersect_sorted(base, orbit);
  if (y.empty()) return {};
  const int k = static_cast<int>(y.size());
  for (int card = 1; card <= k; ++card) {
    std::vector<int> idx(card);
    for (int i = 0; i < card; ++i) idx[i] = i;
    while (true) {
      std::vector<int> z(card);
      for (int i = 0; i < card; ++i) z[i] = y[idx[i]];
      if (subset_of(y, generated_subact(b, z))) return z;
      int i = card - 1;
      while (i >= 0 && idx[i] == k - card + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return y;  // y covers itself: each element is 1*y
}

NonforkingRecord type_nonforking(const PointedTypeRep& p, const std::vector<int>& m) {
  std::vector<int> base = sorted_unique(m);
  if (!is_subact(p.ambient, base))
    throw WorkbenchError(Errc::base_not_contained, "base is not a subact");
  std::vector<int> sparams = generated_subact(p.ambient, p.params);
  if (!subset_of(base, sparams))
    throw WorkbenchError(Errc::base_not_contained,
                         "base is not contained in the generated parameter subact");
  std::vector<int> stuple = generated_subact(p.ambient, sorted_unique(p.tuple));
  NonforkingRecord rec;
  rec.type = p;
  rec.base = base;
  rec.witness = set_difference_sorted(set_intersect_sorted(stuple, sparams), base);
  rec.verdict = rec.witness.empty();
  return rec;
}

MergeOutcome merge_nonforking(const Act& d, int a1, int a2, const std::vector<int>& b,
                              const std::vector<int>& c) {
  std::vector<int> bb = sorted_unique(b), cc = sorted_unique(c);
  if (!is_subact(d, bb) || !is_subact(d, cc) || !subset_of(bb, cc))
    throw WorkbenchError(Errc::base_not_subact, "need subacts B <= C of the ambient act");
  if (a1 < 0 || a1 >= d.size || a2 < 0 || a2 >= d.size)
    throw WorkbenchError(Errc::index_out_of_range, "marked element out of range");

  MergeOutcome out;
  PointedTypeRep pb = type_rep(d, {a1}, bb);
  PointedTypeRep qb = type_rep(d, {a2}, bb);
  TypeEqWitness w = types_equal_witness(pb, qb);
  if (!w.equal) {
    out.status = MergeStatus::restrictions_differ;
    return out;
  }

  std::vector<int> orbit1 = generated_subact(d, {a1});
  std::vector<int> orbit2 = generated_subact(d, {a2});
  std::vector<int> bad1 = set_difference_sorted(set_intersect_sorted(orbit1, cc), bb);
  if (!bad1.empty()) {
    out.status = MergeStatus::forking_detected;
    out.side = 1;
    out.violator = bad1.front();
    return out;
  }
  std::vector<int> bad2 = set_difference_sorted(set_intersect_sorted(orbit2, cc), bb);
  if (!bad2.empty()) {
    out.status = MergeStatus::forking_detected;
    out.side = 2;
    out.violator = bad2.front();
    return out;
  }

  std::vector<int> dom = set_union_sorted(orbit1, cc);
  std::vector<int> cod = set_union_sorted(orbit2, cc);
  std::map<int, int> f(w.map.begin(), w.map.end());  // on S a1 u B, fixes B
  Act dom_act = restrict_to(d, dom);
  Act cod_act = restrict_to(d, cod);
  std::vector<int> cod_pos(d.size, -1);
  for (size_t i = 0; i < cod.size(); ++i) cod_pos[cod[i]] = static_cast<int>(i);
  std::vector<int> gmap(dom.size());
  for (size_t i = 0; i < dom.size(); ++i) {
    int x = dom[i];
    int img = std::binary_search(orbit1.begin(), orbit1.end(), x) ? f.at(x) : x;
    if (cod_pos[img] < 0)
      throw std::logic_error("merge image escaped the codomain");
    gmap[i] = cod_pos[img];
  }
  ActHom iso = ActHom::checked(dom_act, cod_act, gmap);
  if (!iso.is_mono() || !iso.is_epi()) throw std::logic_error("merge map is not a bijection");
  out.iso = iso;
  out.source_elements = dom;
  out.target_elements = cod;
  return out;
}

SplitResult splits_over(const PointedTypeRep& p, const std::vector<int>& m) {
  std::vector<int> base = sorted_unique(m);
  std::vector<int> px = generated_subact(p.ambient, p.params);
  if (!is_subact(p.ambient, base) || !subset_of(base, px))
    throw WorkbenchError(Errc::base_not_contained,
                         "base is not a subact of the generated parameter subact");
  Act px_act = restrict_to(p.ambient, px);
  std::vector<int> px_pos(p.ambient.size, -1);
  for (size_t i = 0; i < px.size(); ++i) px_pos[px[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> subs;  // in ambient indices, each containing base
  for (const auto& local : all_subacts(px_act)) {
    std::vector<int> amb;
    for (int i : local) amb.push_back(px[i]);
    if (subset_of(base, amb)) subs.push_back(amb);
  }

  SplitResult res;
  for (const auto& n1 : subs)
    for (const auto& n2 : subs) {
      if (n1.size() != n2.size()) continue;
      Act a1 = restrict_to(p.ambient, n1);
      Act a2 = restrict_to(p.ambient, n2);
      std::vector<int> pos1(p.ambient.size, -1), pos2(p.ambient.size, -1);
      for (size_t i = 0; i < n1.size(); ++i) pos1[n1[i]] = static_cast<int>(i);
      for (size_t i = 0; i < n2.size(); ++i) pos2[n2[i]] = static_cast<int>(i);
      std::map<int, int> fix;
      for (int x : base) fix[pos1[x]] = pos2[x];
      for (const ActHom& h : enumerate_isos(a1, a2, fix)) {
        PointedTypeRep p1 = type_rep(p.ambient, p.tuple, n1);
        PointedTypeRep p2 = type_rep(p.ambient, p.tuple, n2);
        std::vector<std::pair<int, int>> align;
        for (size_t i = 0; i < n1.size(); ++i) align.emplace_back(n1[i], n2[h.map[i]]);
        if (!types_equal_aligned(p1, p2, align).equal) {
          res.splits = true;
          SplitWitness sw;
          sw.n1 = n1;
          sw.n2 = n2;
          sw.iso = align;
          res.witness = sw;
          return res;
        }
      }
    }
  return res;
}

}  // namespace actwb
