#pragma once

#include <string>

#include "actwb/act.hpp"

namespace actwb {

/// One cell of a cellular decomposition: a pushout square whose top edge is
/// the inclusion of a subact into a cyclic act.
struct CellularStep {
  Act cyclic_target;                // B
  std::vector<int> attaching_subact;  // elements of A inside B (local B labels)
  ActHom attaching_hom;             // A -> K_i
  CommutativeSquare square;         // f1: A->B, f2: A->K_i, g1: B->K_{i+1}, g2: K_i->K_{i+1}
};

struct CellularChain {
  std::vector<CellularStep> steps;
  ActHom composite;  // K -> K_m, the input mono up to the recorded relabeling
};

/// Decomposes a mono K -> L into pushouts of subact inclusions into cyclic
/// acts, working up the image one orbit at a time; the attached element is
/// the least index of L outside the current stage.
CellularChain cellular_factorize(const ActHom& f);

/// True when the square is a pushout of its span (mediating map out of the
/// computed pushout is a bijection).
bool is_pushout_square(const CommutativeSquare& sq);

/// Verifies a chain against the mono it claims to factor: every step a
/// pushout with cyclic target, composite equal to `f` after the stage
/// relabelings. On failure `why` names the broken property.
bool verify_chain(const CellularChain& chain, const ActHom& f, std::string* why = nullptr);

struct SomResult {
  Act act;
  ActHom leg;  // K -> K1, injective
  long cells_attached = 0;
};

/// One small-object-argument step: glues, for every pair (subact A of a
/// cyclic act B, hom A -> K) that does not already extend along A <= B, a
/// copy of B onto K. Fresh elements are appended after K's carrier in cell
/// order (cyclic act, subact, hom).
SomResult som_step(const Act& k);

enum class SatStatus { reached, cap_exceeded };

struct SaturationResult {
  SatStatus status = SatStatus::cap_exceeded;
  int steps = 0;
  Act result;
  ActHom embedding;  // K -> result
};

/// Iterates som_step until the target injectivity test passes, the step cap
/// is exhausted, or the carrier outgrows size_cap.
SaturationResult saturate(const Act& k, int max_steps, bool target_full, int size_cap = 512);

}  // namespace actwb
