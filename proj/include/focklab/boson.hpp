#pragma once

#include "focklab/clifford.hpp"

namespace focklab {

// alpha_k for k != 0 as bead moves: every black bead at p with p - k white
// jumps to p - k, signed by the number of beads it jumps over.
RVec apply_alpha(int k, const ChargedPartition& cp);
ROp alpha(int k);

// alpha_0: multiplication by the charge.
ROp alpha0();

// s^k: |lambda, h> -> |lambda, h + k>.
ROp shift(int k);

// sum_m psi_m psi*_{m+k}, restricted to the window where it can act.
RVec alpha_via_clifford(int k, const ChargedPartition& cp);
ROp alpha_clifford(int k);

}  // namespace focklab
