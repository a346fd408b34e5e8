#include "actwb/enumerate.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

namespace actwb {

namespace {

// Backtracking search over images of carrier elements with forward
// equivariance propagation. Branches on the least unassigned element with
// target candidates ascending, so complete maps come out in lex order.
struct HomSearch {
  const Act& a;
  const Act& b;
  bool want_mono = false;
  long limit = -1;  // -1 = all
  std::vector<int> val;
  std::vector<char> used;  // target occupancy for mono search
  std::vector<ActHom> out;

  HomSearch(const Act& a_, const Act& b_) : a(a_), b(b_), val(a_.size, -1), used(b_.size, 0) {}

  // Assigns val[x]=y and propagates along the action; records touched
  // elements in `trail` for rollback. Returns false on conflict.
  bool assign(int x, int y, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> work{{x, y}};
    while (!work.empty()) {
      auto [cx, cy] = work.back();
      work.pop_back();
      if (val[cx] >= 0) {
        if (val[cx] != cy) return false;
        continue;
      }
      if (want_mono) {
        if (used[cy]) return false;
        used[cy] = 1;
      }
      val[cx] = cy;
      trail.push_back(cx);
      for (int s = 0; s < a.msize(); ++s) work.emplace_back(a.act(s, cx), b.act(s, cy));
    }
    return true;
  }

  void undo(std::vector<int>& trail) {
    for (int x : trail) {
      if (want_mono) used[val[x]] = 0;
      val[x] = -1;
    }
    trail.clear();
  }

  bool seed(const std::map<int, int>& constraints) {
    std::vector<int> trail;
    for (auto [x, y] : constraints) {
      if (x < 0 || x >= a.size || y < 0 || y >= b.size)
        throw WorkbenchError(Errc::index_out_of_range, "constraint (" + std::to_string(x) + "," +
                                                           std::to_string(y) + ")");
      if (!assign(x, y, trail)) return false;
    }
    return true;
  }

  // Returns false when the emit limit has been hit.
  bool run(int from) {
    int x = from;
    while (x < a.size && val[x] >= 0) ++x;
    if (x == a.size) {
      out.push_back(ActHom::trusted(a, b, val));
      return limit < 0 || static_cast<long>(out.size()) < limit;
    }
    std::vector<int> trail;
    for (int y = 0; y < b.size; ++y) {
      if (want_mono && used[y]) continue;
      if (assign(x, y, trail)) {
        if (!run(x + 1)) {
          undo(trail);
          return false;
        }
      }
      undo(trail);
    }
    return true;
  }
};

std::vector<ActHom> search_homs(const Act& a, const Act& b, const std::map<int, int>& constraints,
                                bool mono, long limit) {
  if (!same_monoid(a, b))
    throw WorkbenchError(Errc::monoid_mismatch, "hom search over different monoids");
  HomSearch hs(a, b);
  hs.want_mono = mono;
  hs.limit = limit;
  if (!hs.seed(constraints))
    throw WorkbenchError(Errc::inconsistent_constraints,
                         "partial map violates equivariance on generated elements");
  hs.run(0);
  return std::move(hs.out);
}

}  // namespace

std::vector<ActHom> enumerate_homs(const Act& a, const Act& b,
                                   const std::map<int, int>& constraints) {
  return search_homs(a, b, constraints, false, -1);
}

std::optional<ActHom> find_hom(const Act& a, const Act& b, const std::map<int, int>& constraints) {
  auto v = search_homs(a, b, constraints, false, 1);
  if (v.empty()) return std::nullopt;
  return v.front();
}

std::optional<ActHom> find_mono(const Act& a, const Act& b,
                                const std::map<int, int>& constraints) {
  auto v = search_homs(a, b, constraints, true, 1);
  if (v.empty()) return std::nullopt;
  return v.front();
}

std::vector<ActHom> enumerate_monos(const Act& a, const Act& b,
                                    const std::map<int, int>& constraints) {
  return search_homs(a, b, constraints, true, -1);
}

std::vector<ActHom> enumerate_isos(const Act& a, const Act& b,
                                   const std::map<int, int>& constraints) {
  if (a.size != b.size) return {};
  return enumerate_monos(a, b, constraints);  // injective + equal size = bijective
}

std::vector<std::vector<int>> all_subacts(const Act& a) {
  if (a.size > 20)
    throw WorkbenchError(Errc::index_out_of_range, "carrier too large for subact enumeration");
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 0; mask < (1ul << a.size); ++mask) {
    bool closed = true;
    std::vector<int> elems;
    for (int x = 0; x < a.size && closed; ++x) {
      if (!(mask >> x & 1)) continue;
      elems.push_back(x);
      for (int s = 0; s < a.msize(); ++s)
        if (!(mask >> a.act(s, x) & 1)) {
          closed = false;
          break;
        }
    }
    if (closed) out.push_back(std::move(elems));
  }
  return out;
}

namespace {

void partitions_rec(int i, int blocks, std::vector<int>& cls,
                    const std::function<void(const std::vector<int>&)>& fn) {
  const int n = static_cast<int>(cls.size());
  if (i == n) {
    fn(cls);
    return;
  }
  for (int c = 0; c <= blocks; ++c) {
    cls[i] = c;
    partitions_rec(i + 1, std::max(blocks, c + 1), cls, fn);
  }
}

bool is_act_congruence(const Act& a, const std::vector<int>& cls) {
  for (int u = 0; u < a.size; ++u)
    for (int v = u + 1; v < a.size; ++v) {
      if (cls[u] != cls[v]) continue;
      for (int s = 0; s < a.msize(); ++s)
        if (cls[a.act(s, u)] != cls[a.act(s, v)]) return false;
    }
  return true;
}

}  // namespace

std::vector<std::vector<int>> act_congruences(const Act& a) {
  std::vector<std::vector<int>> out;
  if (a.size == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> cls(a.size, 0);
  partitions_rec(0, 0, cls, [&](const std::vector<int>& c) {
    if (is_act_congruence(a, c)) out.push_back(c);
  });
  return out;
}

QuotientResult quotient_act(const Act& a, const std::vector<int>& classes) {
  int q = classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end()) + 1;
  std::vector<int> rep(q, -1);
  for (int x = 0; x < a.size; ++x)
    if (rep[classes[x]] < 0) rep[classes[x]] = x;
  std::vector<int> action(static_cast<size_t>(a.msize()) * q);
  for (int s = 0; s < a.msize(); ++s)
    for (int c = 0; c < q; ++c) action[static_cast<size_t>(s) * q + c] = classes[a.act(s, rep[c])];
  Act qa{a.monoid, q, std::move(action)};
  return QuotientResult{qa, ActHom::trusted(a, qa, classes)};
}

std::vector<Act> quotients_of_self(const MonoidPtr& m) {
  Act s = self_act(m);
  std::vector<Act> out;
  for (const auto& cls : act_congruences(s)) out.push_back(quotient_act(s, cls).act);
  return out;
}

std::vector<int> canonical_form(const Act& a) {
  if (a.size > 8)
    throw WorkbenchError(Errc::index_out_of_range, "carrier too large for canonical form");
  const int n = a.msize();
  std::vector<int> perm(a.size);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  std::vector<int> cand(static_cast<size_t>(n) * a.size + 1);
  do {
    cand[0] = a.size;
    for (int s = 0; s < n; ++s)
      for (int x = 0; x < a.size; ++x)
        cand[1 + static_cast<size_t>(s) * a.size + perm[x]] = perm[a.act(s, x)];
    if (best.empty() || cand < best) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best.empty()) best = {0};
  return best;
}

bool acts_isomorphic(const Act& a, const Act& b) {
  if (!same_monoid(a, b) || a.size != b.size) return false;
  return canonical_form(a) == canonical_form(b);
}

bool is_cyclic(const Act& a) {
  for (int x = 0; x < a.size; ++x)
    if (static_cast<int>(generated_subact(a, {x}).size()) == a.size) return true;
  return false;
}

std::vector<Act> cyclic_acts(const MonoidPtr& m) {
  std::vector<Act> reps;
  std::vector<std::vector<int>> keys;
  for (const Act& q : quotients_of_self(m)) {
    auto key = canonical_form(q);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      keys.push_back(key);
      reps.push_back(q);
    }
  }
  std::vector<size_t> order(reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
    if (reps[i].size != reps[j].size) return reps[i].size < reps[j].size;
    return keys[i] < keys[j];
  });
  std::vector<Act> out;
  for (size_t i : order) out.push_back(reps[i]);
  return out;
}

// ---- exhaustive act enumeration -------------------------------------------

namespace {

std::mutex g_tables_mutex;

// All transformations of [sz], flattened, lex order. Cached per size.
const std::vector<std::vector<int>>& transformations(int sz) {
  static std::map<int, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  auto it = cache.find(sz);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> all;
  std::vector<int> t(sz, 0);
  while (true) {
    all.push_back(t);
    int i = sz - 1;
    while (i >= 0 && t[i] == sz - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return cache.emplace(sz, std::move(all)).first->second;
}

std::vector<int> compose_tr(const std::vector<int>& f, const std::vector<int>& g) {
  // (f after g)(x) = f[g[x]]
  std::vector<int> h(g.size());
  for (size_t x = 0; x < g.size(); ++x) h[x] = f[g[x]];
  return h;
}

// Power condition of a monoid element: smallest (i, j), 1 <= i < j, with
// s^i = s^j, or j with s^j = identity. Used to prefilter candidates.
struct PowerCond {
  int i = 0, j = 0;     // t^i == t^j required when j > 0 and !to_identity
  bool to_identity = false;  // t^j == id required
};

PowerCond power_condition(const Monoid& m, int s) {
  PowerCond pc;
  std::vector<int> powers;  // powers[k] = s^(k+1)
  int cur = s;
  for (int k = 0; k <= m.size(); ++k) {
    if (cur == 0) {
      pc.j = k + 1;
      pc.to_identity = true;
      return pc;
    }
    for (int p = 0; p < static_cast<int>(powers.size()); ++p)
      if (powers[p] == cur) {
        pc.i = p + 1;
        pc.j = k + 1;
        return pc;
      }
    powers.push_back(cur);
    cur = m.mul(s, cur);
  }
  return pc;
}

bool satisfies_power(const std::vector<int>& t, const PowerCond& pc) {
  if (pc.j == 0) return true;
  int sz = static_cast<int>(t.size());
  std::vector<int> p(t);  // t^1
  std::vector<int> ti;
  for (int k = 2; k <= pc.j; ++k) {
    if (k - 1 == pc.i) ti = p;
    p = compose_tr(t, p);
  }
  if (pc.to_identity) {
    for (int x = 0; x < sz; ++x)
      if (p[x] != x) return false;
    return true;
  }
  if (pc.i == 1) return p == t;
  return p == ti;
}

// Candidate transformation indices per monoid element after the power
// prefilter.
std::vector<std::vector<int>> build_candidates(const Monoid& m, int sz) {
  const auto& trs = transformations(sz);
  std::vector<std::vector<int>> cands(m.size());
  for (int s = 1; s < m.size(); ++s) {
    PowerCond pc = power_condition(m, s);
    for (int ti = 0; ti < static_cast<int>(trs.size()); ++ti)
      if (satisfies_power(trs[ti], pc)) cands[s].push_back(ti);
  }
  return cands;
}

struct ActEnum {
  const Monoid& m;
  int sz;
  const std::vector<std::vector<int>>& trs;
  const std::vector<std::vector<int>>& cands;
  std::vector<int> assigned;                  // element -> transformation idx, -1 unassigned
  std::vector<std::vector<int>> maps;         // element -> transformation (valid when assigned)
  const std::function<bool(const Act&)>& fn;
  bool stopped = false;

  ActEnum(const Monoid& m_, int sz_, const std::vector<std::vector<int>>& trs_,
          const std::vector<std::vector<int>>& cands_, const std::function<bool(const Act&)>& fn_)
      : m(m_), sz(sz_), trs(trs_), cands(cands_), assigned(m_.size(), -1),
        maps(m_.size()), fn(fn_) {
    std::vector<int> id(sz);
    std::iota(id.begin(), id.end(), 0);
    assigned[0] = 0;
    maps[0] = id;
  }

  int tr_index(const std::vector<int>& t) const {
    int idx = 0;
    for (int v : t) idx = idx * sz + v;
    return idx;
  }

  // Sets element e to transformation t, then forces products with every
  // assigned element. Returns false on conflict.
  bool place(int e, const std::vector<int>& t, std::vector<int>& trail) {
    std::vector<std::pair<int, std::vector<int>>> work{{e, t}};
    while (!work.empty()) {
      auto [ce, ct] = work.back();
      work.pop_back();
      if (assigned[ce] >= 0) {
        if (maps[ce] != ct) return false;
        continue;
      }
      assigned[ce] = sz == 0 ? 0 : tr_index(ct);
      maps[ce] = ct;
      trail.push_back(ce);
      for (int o = 0; o < m.size(); ++o) {
        if (assigned[o] < 0) continue;
        work.emplace_back(m.mul(ce, o), compose_tr(ct, maps[o]));
        work.emplace_back(m.mul(o, ce), compose_tr(maps[o], ct));
      }
    }
    return true;
  }

  void undo(std::vector<int>& trail) {
    for (int e : trail) assigned[e] = -1;
    trail.clear();
  }

  void run(int from) {
    if (stopped) return;
    int e = from;
    while (e < m.size() && assigned[e] >= 0) ++e;
    if (e == m.size()) {
      std::vector<int> action(static_cast<size_t>(m.size()) * sz);
      for (int s = 0; s < m.size(); ++s)
        for (int x = 0; x < sz; ++x) action[static_cast<size_t>(s) * sz + x] = maps[s][x];
      if (!fn(Act{nullptr, sz, std::move(action)})) stopped = true;
      return;
    }
    std::vector<int> trail;
    for (int ti : cands[e]) {
      if (place(e, trs[ti], trail)) run(e + 1);
      undo(trail);
      if (stopped) return;
    }
  }
};

}  // namespace

void for_each_act(const MonoidPtr& m, int sz, const std::function<bool(const Act&)>& fn) {
  if (sz == 0) {
    fn(empty_act(m));
    return;
  }
  const auto& trs = transformations(sz);
  auto cands = build_candidates(*m, sz);
  bool keep = true;
  auto wrapped = [&](const Act& raw) {
    Act a = raw;
    a.monoid = m;
    keep = fn(a);
    return keep;
  };
  std::function<bool(const Act&)> cb = wrapped;
  ActEnum en(*m, sz, trs, cands, cb);
  en.run(1);
}

const std::vector<Act>& act_catalog(const MonoidPtr& m, int sz) {
  static std::map<std::pair<std::vector<int>, int>, std::vector<Act>> cache;
  static std::mutex mtx;
  std::pair<std::vector<int>, int> key{m->table(), sz};
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<Act> reps;
  std::vector<std::vector<int>> keys;
  for_each_act(m, sz, [&](const Act& a) {
    auto k = canonical_form(a);
    auto it = std::lower_bound(keys.begin(), keys.end(), k);
    if (it == keys.end() || *it != k) {
      reps.insert(reps.begin() + (it - keys.begin()), a);
      keys.insert(it, k);
    }
    return true;
  });
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(std::move(key), std::move(reps)).first->second;
}

}  // namespace actwb
