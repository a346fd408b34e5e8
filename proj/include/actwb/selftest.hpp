#pragma once

#include <string>
#include <vector>

#include "actwb/gen.hpp"
#include "actwb/types.hpp"

namespace actwb {

struct CatalogEntry {
  std::string name;
  MonoidPtr monoid;
};

/// The shipped monoid catalog: the trivial monoid, cyclic groups Z2-Z4, the
/// symmetric group on two letters, left- and right-zero semigroups with an
/// adjoined identity (sizes 3-5), and two commutative non-group monoids.
const std::vector<CatalogEntry>& builtin_catalog();

struct PropertyResult {
  std::string name;
  bool pass = true;
  long cases = 0;
  std::string counterexample;
  std::vector<std::string> findings;  // reportable observations, not failures
};

/// Runs every module's invariant suite at the given size cap. size_cap 0
/// runs zero cases everywhere (vacuous pass).
std::vector<PropertyResult> run_selftest(uint64_t seed, int size_cap);

// ---- independent oracles, kept apart from the implementations they check --

/// Brute force over all core bijections fixing the parameters (by label) and
/// matching the tuples, equivariance checked directly.
bool types_equal_bruteforce(const PointedTypeRep& p, const PointedTypeRep& q);

/// Direct-definition injectivity at a size bound: extension along every
/// subact inclusion of every act with at most `bound` elements, plus every
/// such inclusion into Q-with-a-zero-adjoined.
bool injective_direct(const Act& q, int bound);

/// The ambient-extension reading of independence: some pair of subacts
/// L1 containing X and L2 containing Y meets only inside the base.
bool independent_by_subact_search(const Act& b, const std::vector<int>& base,
                                  const std::vector<int>& x, const std::vector<int>& y);

/// Coproduct dichotomy scan used by the zoo command and the acceptance
/// suite: search coproducts of injective acts for injectivity failures.
struct DichotomyScan {
  bool right_rev = false;
  int injective_count = 0;
  long coproducts_checked = 0;
  long coproduct_failures = 0;
  bool violation = false;  // a failure on a right-reversible monoid
};
DichotomyScan dichotomy_scan(const MonoidPtr& m, int max_act_size);

}  // namespace actwb
