#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "actwb/act.hpp"

namespace actwb {

/// All equivariant maps A -> B extending `constraints`, in lexicographic
/// order of the map array. Throws InconsistentConstraints when the partial
/// map already violates equivariance on generated elements.
std::vector<ActHom> enumerate_homs(const Act& a, const Act& b,
                                   const std::map<int, int>& constraints = {});

/// First hom in the enumeration order, or nullopt.
std::optional<ActHom> find_hom(const Act& a, const Act& b,
                               const std::map<int, int>& constraints = {});

/// First injective hom, or nullopt.
std::optional<ActHom> find_mono(const Act& a, const Act& b,
                                const std::map<int, int>& constraints = {});

std::vector<ActHom> enumerate_monos(const Act& a, const Act& b,
                                    const std::map<int, int>& constraints = {});

/// Equivariant bijections A -> B extending `constraints`.
std::vector<ActHom> enumerate_isos(const Act& a, const Act& b,
                                   const std::map<int, int>& constraints = {});

/// Every action-closed subset, ordered by ascending bitmask (element i is
/// bit i). Carrier must have at most 20 elements.
std::vector<std::vector<int>> all_subacts(const Act& a);

/// Left-act congruences of `a` as class-id vectors (classes numbered by
/// least member), enumerated over all set partitions and filtered.
std::vector<std::vector<int>> act_congruences(const Act& a);

struct QuotientResult {
  Act act;
  ActHom project;
};
QuotientResult quotient_act(const Act& a, const std::vector<int>& classes);

/// All quotients of S acting on itself (labeled, one per congruence).
std::vector<Act> quotients_of_self(const MonoidPtr& m);

/// Cyclic acts up to isomorphism, sorted by (size, canonical form).
std::vector<Act> cyclic_acts(const MonoidPtr& m);

/// Calls fn for every act with carrier size `sz` over `m`, in lexicographic
/// order of the per-element transformation assignment. fn returns false to
/// stop early.
void for_each_act(const MonoidPtr& m, int sz, const std::function<bool(const Act&)>& fn);

/// Acts of carrier size `sz` up to isomorphism, deterministic order; cached.
const std::vector<Act>& act_catalog(const MonoidPtr& m, int sz);

/// Lexicographically least relabeling of the action table; the dedup key for
/// isomorphism classes. Carrier must have at most 8 elements.
std::vector<int> canonical_form(const Act& a);

bool acts_isomorphic(const Act& a, const Act& b);

bool is_cyclic(const Act& a);

}  // namespace actwb
