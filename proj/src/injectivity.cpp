#include "actwb/injectivity.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "actwb/enumerate.hpp"

namespace actwb {

std::optional<int> zero_element(const Act& q) {
  for (int x = 0; x < q.size; ++x) {
    bool fixed = true;
    for (int s = 0; s < q.msize() && fixed; ++s) fixed = q.act(s, x) == x;
    if (fixed) return x;
  }
  return std::nullopt;
}

bool has_zero(const Act& q) { return zero_element(q).has_value(); }

Act adjoin_zero(const Act& q) {
  const int n = q.msize();
  const int sz = q.size + 1;
  std::vector<int> action(static_cast<size_t>(n) * sz);
  for (int s = 0; s < n; ++s) {
    for (int x = 0; x < q.size; ++x) action[static_cast<size_t>(s) * sz + x] = q.act(s, x);
    action[static_cast<size_t>(s) * sz + q.size] = q.size;
  }
  return Act{q.monoid, sz, std::move(action)};
}

namespace {

// Extension of an ideal hom f: I -> Q to S -> Q exists iff some q0 realizes
// every equation d*q0 = f(d); a hom out of S is s -> s*q0.
bool ideal_hom_extends(const Act& q, const std::vector<int>& ideal, const std::vector<int>& f) {
  for (int q0 = 0; q0 < q.size; ++q0) {
    bool ok = true;
    for (size_t i = 0; i < ideal.size() && ok; ++i) ok = q.act(ideal[i], q0) == f[i];
    if (ok) return true;
  }
  return ideal.empty() ? q.size > 0 : false;
}

InjectivityVerdict ideal_test(const Act& q, InjLevel level, int n) {
  InjectivityVerdict v;
  v.level = level;
  v.param = n;
  Act s = self_act(q.monoid);
  for (const LeftIdeal& ideal : all_left_ideals(*q.monoid)) {
    if (level == InjLevel::n_injective && static_cast<int>(ideal.min_generators.size()) > n)
      continue;
    Act ideal_act = restrict_to(s, ideal.elements);
    for (const ActHom& f : enumerate_homs(ideal_act, q)) {
      if (!ideal_hom_extends(q, ideal.elements, f.map)) {
        v.counterexample = ExtensionFailure{s, ideal.elements, f.map};
        return v;
      }
    }
  }
  v.verdict = true;
  return v;
}

bool extends_along(const Act& big, const std::vector<int>& small, const std::vector<int>& f,
                   const Act& q) {
  std::map<int, int> constraints;
  for (size_t i = 0; i < small.size(); ++i) constraints[small[i]] = f[i];
  return find_hom(big, q, constraints).has_value();
}

}  // namespace

InjectivityVerdict is_n_injective(const Act& q, int n) {
  if (n < 1) throw WorkbenchError(Errc::index_out_of_range, "n must be positive", {n});
  return ideal_test(q, InjLevel::n_injective, n);
}

InjectivityVerdict is_weakly_injective(const Act& q) {
  return ideal_test(q, InjLevel::weakly_injective, 0);
}

InjectivityVerdict is_injective(const Act& q) {
  InjectivityVerdict v;
  v.level = InjLevel::injective;
  if (!has_zero(q)) {
    // The identity of Q into Q-with-a-zero-adjoined has no extension.
    Act big = adjoin_zero(q);
    std::vector<int> small(q.size);
    std::iota(small.begin(), small.end(), 0);
    v.counterexample = ExtensionFailure{big, small, small};
    return v;
  }
  for (const Act& b : cyclic_acts(q.monoid)) {
    for (const std::vector<int>& a : all_subacts(b)) {
      Act a_act = restrict_to(b, a);
      for (const ActHom& f : enumerate_homs(a_act, q)) {
        if (!extends_along(b, a, f.map, q)) {
          v.counterexample = ExtensionFailure{b, a, f.map};
          return v;
        }
      }
    }
  }
  v.verdict = true;
  return v;
}

InjectivityVerdict is_absolutely_pure(const Act& q, int bound) {
  if (bound < 1) throw WorkbenchError(Errc::index_out_of_range, "bound must be positive", {bound});
  InjectivityVerdict v;
  v.level = InjLevel::absolutely_pure;
  v.param = bound;
  for (int m = 1; m <= bound; ++m) {
    for (const Act& c : act_catalog(q.monoid, m)) {
      for (const std::vector<int>& b : all_subacts(c)) {
        if (b.empty()) continue;  // finitely generated subacts are nonempty
        Act b_act = restrict_to(c, b);
        for (const ActHom& f : enumerate_homs(b_act, q)) {
          if (!extends_along(c, b, f.map, q)) {
            v.counterexample = ExtensionFailure{c, b, f.map};
            return v;
          }
        }
      }
    }
  }
  v.verdict = true;
  return v;
}

}  // namespace actwb
