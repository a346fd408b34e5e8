#pragma once

#include <memory>
#include <vector>

#include "actwb/error.hpp"

namespace actwb {

/// A finite monoid given by its full multiplication table. The identity is
/// pinned at index 0; tables with the identity elsewhere are rejected rather
/// than permuted.
class Monoid {
 public:
  /// Checks associativity and the identity law at index 0.
  static Monoid validate(const std::vector<std::vector<int>>& table);

  int size() const { return n_; }
  int mul(int s, int t) const { return table_[s * n_ + t]; }
  const std::vector<int>& table() const { return table_; }

  bool commutative() const;

  std::vector<std::vector<int>> rows() const;

 private:
  Monoid(int n, std::vector<int> table) : n_(n), table_(std::move(table)) {}

  int n_;
  std::vector<int> table_;  // row-major, table_[s*n+t] = s*t
};

using MonoidPtr = std::shared_ptr<const Monoid>;

inline MonoidPtr make_monoid(const std::vector<std::vector<int>>& table) {
  return std::make_shared<const Monoid>(Monoid::validate(table));
}

bool same_monoid(const Monoid& a, const Monoid& b);

/// A left ideal together with one exact minimum generating set. Generators
/// are the lexicographically least subset among those of minimum cardinality.
struct LeftIdeal {
  std::vector<int> elements;        // sorted
  std::vector<int> min_generators;  // sorted, empty for the empty ideal
};

/// S*a, sorted. Always contains a.
std::vector<int> principal_ideal(const Monoid& m, int a);

/// Every subset closed under left multiplication, the empty set and S
/// included, ordered by (size, elements). Each carries its exact minimum
/// generating set.
std::vector<LeftIdeal> all_left_ideals(const Monoid& m);

/// Exact minimum generating set of a left-closed subset: the least-cardinality
/// G with ideal = union of S*g over g in G, ties broken lexicographically.
std::vector<int> min_generating_ideal_set(const Monoid& m, const std::vector<int>& ideal);

/// max over left ideals of |min_generators|; 1 for groups and the trivial
/// monoid.
int generation_degree(const Monoid& m);

/// true iff S*t and S*r intersect for all t, r.
bool right_reversible(const Monoid& m);

}  // namespace actwb
