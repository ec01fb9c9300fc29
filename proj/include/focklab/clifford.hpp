#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "focklab/fockvec.hpp"

namespace focklab {

// psi_m: place a bead at m. Sign is (-1)^(number of beads above m).
RVec apply_psi(HalfInt m, const ChargedPartition& cp);
// psi*_m: take the bead at m away, with the same sign rule.
RVec apply_psi_star(HalfInt m, const ChargedPartition& cp);

ROp psi(HalfInt m);
ROp psi_star(HalfInt m);

struct RelationFailure {
    std::string relation;
    ChargedPartition state;
    RVec lhs;
    RVec rhs;
};

// Checks psi_m psi_n + psi_n psi_m = 0, the starred analogue, and
// psi_n psi*_m + psi*_m psi_n = delta_{m,n} on every given state.
std::optional<RelationFailure> anticommutator_check(HalfInt m, HalfInt n, const std::vector<ChargedPartition>& states);

struct BilinearTerm {
    enum class Order { creation_first, annihilation_first };
    Rational coeff;
    HalfInt m;  // creation index
    HalfInt n;  // annihilation index
    // creation_first: coeff * psi_m psi*_n; annihilation_first: coeff * psi*_n psi_m.
    Order order = Order::creation_first;
};

// Finite piece of an element of the completed Clifford algebra applied to a
// basis state. The caller supplies every term that can act non-trivially.
RVec bilinear_sum(std::span<const BilinearTerm> terms, const ChargedPartition& cp);

// The normally ordered charge operator sum_{m>0} psi_m psi*_m - sum_{m<0} psi*_m psi_m,
// with the range read off the Maya window of cp.
RVec normal_ordered_charge(const ChargedPartition& cp);

}  // namespace focklab
