#include "actwb/monoid.hpp"

#include <algorithm>
#include <string>

namespace actwb {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::malformed_table: return "MalformedTable";
    case Errc::not_associative: return "NotAssociative";
    case Errc::identity_law: return "IdentityLawFails";
    case Errc::unit_law: return "UnitLawFails";
    case Errc::act_associativity: return "AssociativityFails";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::monoid_mismatch: return "MonoidMismatch";
    case Errc::source_mismatch: return "SourceMismatch";
    case Errc::target_mismatch: return "TargetMismatch";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::not_mono: return "NotMono";
    case Errc::not_commutative: return "NotCommutative";
    case Errc::not_equivariant: return "NotEquivariant";
    case Errc::inconsistent_constraints: return "InconsistentConstraints";
    case Errc::base_not_subact: return "BaseNotSubact";
    case Errc::element_in_base: return "ElementInBase";
    case Errc::base_not_contained: return "BaseNotContained";
    case Errc::not_a_subset: return "NotASubset";
    case Errc::param_mismatch: return "ParamMismatch";
    case Errc::tuple_length_mismatch: return "TupleLengthMismatch";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

Monoid Monoid::validate(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw WorkbenchError(Errc::malformed_table, "empty table");
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw WorkbenchError(Errc::malformed_table, "table is not square");
    for (int v : row) {
      if (v < 0 || v >= n)
        throw WorkbenchError(Errc::malformed_table, "entry out of range", {v});
      flat.push_back(v);
    }
  }
  for (int s = 0; s < n; ++s) {
    if (flat[0 * n + s] != s || flat[s * n + 0] != s)
      throw WorkbenchError(Errc::identity_law,
                           "element 0 is not a two-sided identity at " + std::to_string(s), {s});
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < n; ++u) {
        if (flat[flat[s * n + t] * n + u] != flat[s * n + flat[t * n + u]])
          throw WorkbenchError(Errc::not_associative,
                               "(" + std::to_string(s) + "," + std::to_string(t) + "," +
                                   std::to_string(u) + ")",
                               {s, t, u});
      }
  return Monoid(n, std::move(flat));
}

bool Monoid::commutative() const {
  for (int s = 0; s < n_; ++s)
    for (int t = s + 1; t < n_; ++t)
      if (mul(s, t) != mul(t, s)) return false;
  return true;
}

std::vector<std::vector<int>> Monoid::rows() const {
  std::vector<std::vector<int>> out(n_);
  for (int s = 0; s < n_; ++s)
    out[s] = std::vector<int>(table_.begin() + static_cast<ptrdiff_t>(s) * n_,
                              table_.begin() + static_cast<ptrdiff_t>(s + 1) * n_);
  return out;
}

bool same_monoid(const Monoid& a, const Monoid& b) {
  return a.size() == b.size() && a.table() == b.table();
}

std::vector<int> principal_ideal(const Monoid& m, int a) {
  if (a < 0 || a >= m.size())
    throw WorkbenchError(Errc::index_out_of_range, "element " + std::to_string(a), {a});
  std::vector<char> in(m.size(), 0);
  for (int s = 0; s < m.size(); ++s) in[m.mul(s, a)] = 1;
  std::vector<int> out;
  for (int x = 0; x < m.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

namespace {

bool covers(const Monoid& m, const std::vector<std::vector<int>>& principal,
            const std::vector<int>& gens, const std::vector<int>& target) {
  std::vector<char> in(m.size(), 0);
  for (int g : gens)
    for (int x : principal[g]) in[x] = 1;
  for (int x : target)
    if (!in[x]) return false;
  return true;
}

// First k-subset (lex over positions) of `pool` whose principal ideals cover
// `target`, cardinality ascending.
std::vector<int> min_cover(const Monoid& m, const std::vector<std::vector<int>>& principal,
                           const std::vector<int>& pool, const std::vector<int>& target) {
  if (target.empty()) return {};
  const int p = static_cast<int>(pool.size());
  for (int k = 1; k <= p; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<int> gens(k);
      for (int i = 0; i < k; ++i) gens[i] = pool[idx[i]];
      if (covers(m, principal, gens, target)) return gens;
      int i = k - 1;
      while (i >= 0 && idx[i] == p - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return pool;  // pool itself always covers: x in S*x
}

}  // namespace

std::vector<int> min_generating_ideal_set(const Monoid& m, const std::vector<int>& ideal) {
  std::vector<std::vector<int>> principal(m.size());
  for (int a = 0; a < m.size(); ++a) principal[a] = principal_ideal(m, a);
  return min_cover(m, principal, ideal, ideal);
}

std::vector<LeftIdeal> all_left_ideals(const Monoid& m) {
  const int n = m.size();
  if (n > 20) throw WorkbenchError(Errc::index_out_of_range, "monoid too large to enumerate ideals");
  std::vector<std::vector<int>> principal(n);
  for (int a = 0; a < n; ++a) principal[a] = principal_ideal(m, a);

  std::vector<LeftIdeal> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    bool closed = true;
    std::vector<int> elems;
    for (int x = 0; x < n && closed; ++x) {
      if (!(mask >> x & 1)) continue;
      elems.push_back(x);
      for (int s = 0; s < n; ++s)
        if (!(mask >> m.mul(s, x) & 1)) {
          closed = false;
          break;
        }
    }
    if (!closed) continue;
    LeftIdeal ideal;
    ideal.elements = elems;
    ideal.min_generators = min_cover(m, principal, elems, elems);
    out.push_back(std::move(ideal));
  }
  std::sort(out.begin(), out.end(), [](const LeftIdeal& a, const LeftIdeal& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

int generation_degree(const Monoid& m) {
  int best = 0;
  for (const auto& ideal : all_left_ideals(m))
    best = std::max(best, static_cast<int>(ideal.min_generators.size()));
  return best;
}

bool right_reversible(const Monoid& m) {
  const int n = m.size();
  std::vector<std::vector<int>> principal(n);
  for (int a = 0; a < n; ++a) principal[a] = principal_ideal(m, a);
  for (int t = 0; t < n; ++t)
    for (int r = t + 1; r < n; ++r) {
      bool meet = false;
      for (int x : principal[t])
        if (std::binary_search(principal[r].begin(), principal[r].end(), x)) {
          meet = true;
          break;
        }
      if (!meet) return false;
    }
  return true;
}

}  // namespace actwb
