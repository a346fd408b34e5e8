#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "actwb/monoid.hpp"

namespace actwb {

/// A finite left act over a finite monoid: a carrier of `size` elements and
/// the action table. The empty act (size 0) is a first-class object.
struct Act {
  MonoidPtr monoid;
  int size = 0;
  std::vector<int> action;  // row-major, action[s*size+x] = s*x

  int act(int s, int x) const { return action[static_cast<size_t>(s) * size + x]; }
  int msize() const { return monoid->size(); }
};

/// Checks the unit law at monoid index 0 and mixed associativity.
Act validate_act(MonoidPtr m, const std::vector<std::vector<int>>& rows);

Act self_act(MonoidPtr m);
Act empty_act(MonoidPtr m);
Act singleton_act(MonoidPtr m);

bool same_monoid(const Act& a, const Act& b);
bool acts_equal(const Act& a, const Act& b);

struct ActHom {
  Act source;
  Act target;
  std::vector<int> map;  // length source.size

  int operator()(int x) const { return map[x]; }
  bool is_mono() const;
  bool is_epi() const;

  /// Verifies equivariance; throws NotEquivariant otherwise.
  static ActHom checked(Act src, Act tgt, std::vector<int> map);
  /// Trusted constructor for maps produced by the library itself.
  static ActHom trusted(Act src, Act tgt, std::vector<int> map);
};

ActHom identity_hom(const Act& a);
ActHom compose(const ActHom& g, const ActHom& f);  // g after f
bool is_equivariant(const Act& src, const Act& tgt, const std::vector<int>& map);

// ---- sorted index-set helpers -------------------------------------------

std::vector<int> set_union_sorted(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_intersect_sorted(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_difference_sorted(const std::vector<int>& a, const std::vector<int>& b);
bool subset_of(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> sorted_unique(std::vector<int> v);

/// SX = { s*x : s in S, x in X }, sorted. Contains X; closed; empty iff X is.
std::vector<int> generated_subact(const Act& a, const std::vector<int>& xs);
bool is_subact(const Act& a, const std::vector<int>& elems);

/// The induced act on a closed subset, relabeled by position in the sorted
/// element list.
Act restrict_to(const Act& a, const std::vector<int>& elems);
ActHom inclusion_hom(const Act& a, const std::vector<int>& elems);

/// Exact minimum generating set of a subact, same tie-break as for ideals.
std::vector<int> min_generating_subact_set(const Act& a, const std::vector<int>& elems);

// ---- (co)limits -----------------------------------------------------------

struct CoproductResult {
  Act act;
  ActHom inj1, inj2;
};
CoproductResult coproduct(const Act& a, const Act& b);

/// Pushout of f1: A0->A1, f2: A0->A2. Carrier classes are labeled by least
/// tagged index (A1 elements first), so outputs are bit-stable.
struct PushoutResult {
  Act act;
  ActHom leg1, leg2;  // A1->P, A2->P
};
PushoutResult pushout(const ActHom& f1, const ActHom& f2);

struct PullbackResult {
  Act act;
  ActHom proj1, proj2;  // P->A1, P->A2
  std::vector<std::pair<int, int>> pairs;
};
PullbackResult pullback(const ActHom& g1, const ActHom& g2);

struct EqualizerResult {
  Act act;
  ActHom include;
};
EqualizerResult equalizer(const ActHom& f, const ActHom& g);

struct CoequalizerResult {
  Act act;
  ActHom project;
};
CoequalizerResult coequalizer(const ActHom& f, const ActHom& g);

struct Factorization {
  Act image;
  ActHom epi;   // A->image
  ActHom mono;  // image->B
};
Factorization epi_mono_factorize(const ActHom& h);

/// Pushout of a span of monos; the legs are injective and their images meet
/// exactly in the image of the shared source.
struct AmalgamResult {
  Act act;
  ActHom f1, f2;  // B1->N, B2->N
};
AmalgamResult disjoint_amalgam(const ActHom& i1, const ActHom& i2);

/// f1: A0->A1, f2: A0->A2, g1: A1->A3, g2: A2->A3 with g1 f1 = g2 f2.
struct CommutativeSquare {
  ActHom f1, f2, g1, g2;
};
bool square_commutes(const CommutativeSquare& sq);

/// Mediating map out of a pushout for a commuting cocone (g1: A1->T,
/// g2: A2->T); nullopt when the cocone does not factor.
std::optional<ActHom> pushout_mediate(const PushoutResult& po, const ActHom& g1,
                                      const ActHom& g2);

/// Mediating map into a pullback for a commuting cone (h1: T->A1, h2: T->A2);
/// nullopt when some pair lands outside the pullback.
std::optional<ActHom> pullback_mediate(const PullbackResult& pb, const ActHom& h1,
                                       const ActHom& h2);

}  // namespace actwb
