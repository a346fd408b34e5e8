#pragma once

#include <optional>

#include "actwb/act.hpp"

namespace actwb {

bool has_zero(const Act& q);
std::optional<int> zero_element(const Act& q);

/// A failed extension instance: the hom from the subact of `big` spanned by
/// `small_elements` (values aligned with that list) admits no extension to
/// all of `big`. Replayable by rerunning the extension search.
struct ExtensionFailure {
  Act big;
  std::vector<int> small_elements;
  std::vector<int> hom;
};

enum class InjLevel { n_injective, weakly_injective, injective, absolutely_pure };

struct InjectivityVerdict {
  InjLevel level;
  int param = 0;  // n for n_injective, bound for absolutely_pure
  bool verdict = false;
  std::optional<ExtensionFailure> counterexample;
};

/// Every hom from every left ideal with at most n generators extends to S.
/// The empty ideal is included, so empty acts always fail.
InjectivityVerdict is_n_injective(const Act& q, int n);

/// Every hom from every left ideal extends to S.
InjectivityVerdict is_weakly_injective(const Act& q);

/// Skornjakov-Baer criterion: a zero element plus extension along every
/// subact inclusion into a cyclic act.
InjectivityVerdict is_injective(const Act& q);

/// Bounded purity: homs from nonempty subacts of every act with at most
/// `bound` elements extend. The bound is recorded in the verdict; no claim
/// beyond it is made.
InjectivityVerdict is_absolutely_pure(const Act& q, int bound);

/// Adjoins a fixed point as the last carrier element.
Act adjoin_zero(const Act& q);

}  // namespace actwb
