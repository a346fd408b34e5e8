#include "actwb/types.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace actwb {

PointedTypeRep type_rep(const Act& ambient, const std::vector<int>& tuple,
                        const std::vector<int>& params) {
  for (int x : tuple)
    if (x < 0 || x >= ambient.size)
      throw WorkbenchError(Errc::index_out_of_range, "tuple entry " + std::to_string(x), {x});
  for (int x : params)
    if (x < 0 || x >= ambient.size)
      throw WorkbenchError(Errc::index_out_of_range, "parameter " + std::to_string(x), {x});
  PointedTypeRep rep;
  rep.ambient = ambient;
  rep.tuple = tuple;
  rep.params = sorted_unique(params);
  std::vector<int> gens = rep.params;
  gens.insert(gens.end(), tuple.begin(), tuple.end());
  rep.core_elements = generated_subact(ambient, sorted_unique(gens));
  rep.core = restrict_to(ambient, rep.core_elements);
  std::vector<int> pos(ambient.size, -1);
  for (size_t i = 0; i < rep.core_elements.size(); ++i)
    pos[rep.core_elements[i]] = static_cast<int>(i);
  for (int b : tuple) rep.core_tuple.push_back(pos[b]);
  for (int x : rep.params) rep.core_params.push_back(pos[x]);
  return rep;
}

namespace {

std::string eq_text(const std::string& kind, int s, int root, int img) {
  std::ostringstream ss;
  ss << kind << ": s=" << s << " on " << root << " -> " << img;
  return ss.str();
}

}  // namespace

TypeEqWitness types_equal_aligned(const PointedTypeRep& p, const PointedTypeRep& q,
                                  const std::vector<std::pair<int, int>>& param_align) {
  if (!same_monoid(p.ambient, q.ambient))
    throw WorkbenchError(Errc::monoid_mismatch, "type reps over different monoids");
  if (p.tuple.size() != q.tuple.size())
    throw WorkbenchError(Errc::tuple_length_mismatch,
                         std::to_string(p.tuple.size()) + " vs " + std::to_string(q.tuple.size()));
  {
    std::vector<int> dom, img;
    for (auto [x, y] : param_align) {
      dom.push_back(x);
      img.push_back(y);
    }
    if (sorted_unique(dom) != p.params || sorted_unique(img) != q.params ||
        dom.size() != p.params.size())
      throw WorkbenchError(Errc::param_mismatch,
                           "alignment is not a bijection between the parameter sets");
  }

  const Act& na = p.ambient;
  const Act& nb = q.ambient;
  const int n = na.msize();
  TypeEqWitness w;

  // Candidate image per core element of p, merged over all presentations.
  std::map<int, int> image;
  auto put = [&](int d, int v, const std::string& why) {
    auto it = image.find(d);
    if (it == image.end()) {
      image[d] = v;
      return true;
    }
    if (it->second != v) {
      w.violation = "element " + std::to_string(d) + " receives both " +
                    std::to_string(it->second) + " and " + std::to_string(v) + " (" + why + ")";
      return false;
    }
    return true;
  };

  for (auto [x, y] : param_align)
    for (int s = 0; s < n; ++s)
      if (!put(na.act(s, x), nb.act(s, y), eq_text("param orbit", s, x, y))) return w;
  for (size_t l = 0; l < p.tuple.size(); ++l)
    for (int s = 0; s < n; ++s)
      if (!put(na.act(s, p.tuple[l]), nb.act(s, q.tuple[l]),
               eq_text("tuple orbit", s, p.tuple[l], q.tuple[l])))
        return w;

  // Well-defined; now bijectivity onto the other core.
  if (image.size() != q.core_elements.size()) {
    w.violation = "cores have sizes " + std::to_string(image.size()) + " vs " +
                  std::to_string(q.core_elements.size());
    return w;
  }
  std::vector<int> values;
  for (auto [d, v] : image) values.push_back(v);
  std::vector<int> values_sorted = sorted_unique(values);
  if (values_sorted.size() != values.size()) {
    w.violation = "assignment is not injective";
    return w;
  }
  if (values_sorted != q.core_elements) {
    w.violation = "assignment does not cover the second core";
    return w;
  }

  w.equal = true;
  for (auto [d, v] : image) w.map.emplace_back(d, v);
  return w;
}

TypeEqWitness types_equal_witness(const PointedTypeRep& p, const PointedTypeRep& q) {
  if (p.params != q.params)
    throw WorkbenchError(Errc::param_mismatch, "parameter sets differ; align labels first");
  std::vector<std::pair<int, int>> ident;
  for (int x : p.params) ident.emplace_back(x, x);
  return types_equal_aligned(p, q, ident);
}

bool types_equal(const PointedTypeRep& p, const PointedTypeRep& q) {
  return types_equal_witness(p, q).equal;
}

PointedTypeRep restrict_type(const PointedTypeRep& p, const std::vector<int>& x0) {
  std::vector<int> xs = sorted_unique(x0);
  if (!subset_of(xs, p.params))
    throw WorkbenchError(Errc::not_a_subset, "restriction set is not contained in the parameters");
  return type_rep(p.ambient, p.tuple, xs);
}

}  // namespace actwb
