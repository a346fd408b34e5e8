#pragma once

#include <cstdint>
#include <random>

#include "actwb/act.hpp"

namespace actwb {

/// Deterministic RNG. Bounded draws go through next() % n rather than a
/// standard distribution so the stream is identical across platforms.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}
  uint64_t next() { return eng(); }
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<uint64_t>(n)); }
  bool coin() { return (next() & 1) != 0; }
};

/// Uniform-ish random act of the given carrier size: a backtracking search
/// over per-element transformations with the candidate scan rotated by a
/// random offset at every level.
Act random_act(const MonoidPtr& m, int sz, Rng& rng);

/// Random subset of {0..m-1}; each element kept with probability 1/2.
std::vector<int> random_subset(int m, Rng& rng);

std::vector<int> random_nonempty_subset(int m, Rng& rng);

/// Subact generated by a random subset.
std::vector<int> random_subact(const Act& a, Rng& rng);

/// Random extension K -> L adding at most `extra_cap` elements: either a
/// disjoint summand or a cell glued along a subact of a cyclic act.
struct Extension {
  Act bigger;
  ActHom embed;
};
Extension random_extension(const Act& k, int extra_cap, Rng& rng);

/// Glues one copy of the cyclic act B onto L along the subact spanned by
/// `a_elems` via the hom values `u`; the embedding is the pushout leg.
Extension attach_cell(const Act& l, const Act& b, const std::vector<int>& a_elems,
                      const std::vector<int>& u);

/// Every extension of K reachable by chains of cells that do not extend at
/// their stage (the attachments a saturation step makes), adding at most
/// `max_fresh` elements. Includes the identity extension.
std::vector<Extension> nonextendable_cell_extensions(const Act& k, int max_fresh);

}  // namespace actwb
