#pragma once

#include <optional>

#include "actwb/types.hpp"

namespace actwb {

/// X is independent from Y over `base` inside `ambient` iff SX and SY meet
/// only inside the base.
struct IndependenceQuery {
  Act ambient;
  std::vector<int> base;   // a subact of ambient
  std::vector<int> left;   // X
  std::vector<int> right;  // Y
};

struct IndependenceVerdict {
  bool independent = false;
  std::vector<int> witness;  // (SX n SY) \ base when dependent
};

/// Image-intersection test for a square of monos: g1[A1] n g2[A2] = g1 f1[A0].
bool square_is_independent(const CommutativeSquare& sq);

IndependenceVerdict is_independent(const IndependenceQuery& q);

/// Smallest Z inside A n Sx with A n Sx contained in SZ; empty when the
/// intersection is. Exact search, lexicographically least at minimum size.
std::vector<int> minimal_base(const Act& b, const std::vector<int>& a, int x);

struct NonforkingRecord {
  PointedTypeRep type;
  std::vector<int> base;
  bool verdict = false;
  std::vector<int> witness;  // (S tuple n S params) \ base when forking
};

/// gtp does not fork over M iff S(tuple) n S(params) lies inside M.
NonforkingRecord type_nonforking(const PointedTypeRep& p, const std::vector<int>& m);

enum class MergeStatus { ok, restrictions_differ, forking_detected };

struct MergeOutcome {
  MergeStatus status = MergeStatus::ok;
  int side = 0;       // 1 or 2 for forking_detected
  int violator = -1;  // offending element for forking_detected
  std::optional<ActHom> iso;  // Sa1 u C -> Sa2 u C, fixing C, a1 -> a2
  std::vector<int> source_elements, target_elements;  // ambient index lists
};

/// The constructive uniqueness merge: when the B-restrictions of gtp(a1/C)
/// and gtp(a2/C) agree and both types do not fork over B, produces the
/// explicit isomorphism (the restriction witness on S a1, identity on C).
MergeOutcome merge_nonforking(const Act& d, int a1, int a2, const std::vector<int>& b,
                              const std::vector<int>& c);

struct SplitWitness {
  std::vector<int> n1, n2;
  std::vector<std::pair<int, int>> iso;
};

struct SplitResult {
  bool splits = false;
  std::optional<SplitWitness> witness;
};

/// Brute-force splitting test: searches subacts M <= N1, N2 <= S(params) and
/// isomorphisms h fixing M with h(p|N1) != p|N2.
SplitResult splits_over(const PointedTypeRep& p, const std::vector<int>& m);

}  // namespace actwb
