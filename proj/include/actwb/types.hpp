#pragma once

#include <string>
#include <utility>
#include <vector>

#include "actwb/act.hpp"

namespace actwb {

/// Canonical representative of a quantifier-free type: the subact generated
/// by tuple and parameters inside the ambient act, with the tuple and
/// parameter positions marked. Core labels follow the sorted ambient indices.
struct PointedTypeRep {
  Act ambient;
  std::vector<int> tuple;   // ambient indices, repetitions allowed
  std::vector<int> params;  // sorted ambient indices
  std::vector<int> core_elements;  // sorted ambient indices of S(tuple)+S(params)
  Act core;
  std::vector<int> core_tuple;   // tuple positions in core labels
  std::vector<int> core_params;  // parameter positions in core labels
};

PointedTypeRep type_rep(const Act& ambient, const std::vector<int>& tuple,
                        const std::vector<int>& params);

struct TypeEqWitness {
  bool equal = false;
  /// The canonical assignment as (ambient index of p, ambient index of q)
  /// pairs when equal; the violated equation otherwise.
  std::vector<std::pair<int, int>> map;
  std::string violation;
};

/// Decides equality via the canonical assignment s*x -> s*x on parameters and
/// s*b1[l] -> s*b2[l] on the tuple orbit: equal iff that assignment is a
/// well-defined equivariant bijection of the cores fixing the parameters.
TypeEqWitness types_equal_witness(const PointedTypeRep& p, const PointedTypeRep& q);
bool types_equal(const PointedTypeRep& p, const PointedTypeRep& q);

/// Same criterion with an explicit parameter correspondence (a bijection
/// p.params -> q.params), for callers that align parameters by an
/// isomorphism rather than by label identity.
TypeEqWitness types_equal_aligned(const PointedTypeRep& p, const PointedTypeRep& q,
                                  const std::vector<std::pair<int, int>>& param_align);

PointedTypeRep restrict_type(const PointedTypeRep& p, const std::vector<int>& x0);

}  // namespace actwb
