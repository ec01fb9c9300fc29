#include "focklab/clifford.hpp"

#include <algorithm>

namespace focklab {

RVec apply_psi(HalfInt m, const ChargedPartition& cp) {
    Maya maya(cp);
    if (maya.black(m.twice())) return {};
    const int sign = maya.blacks_above(m.twice()) % 2 == 0 ? 1 : -1;
    maya.set(m.twice(), true);
    return RVec::basis(maya.to_charged(), Rational(sign));
}

RVec apply_psi_star(HalfInt m, const ChargedPartition& cp) {
    Maya maya(cp);
    if (!maya.black(m.twice())) return {};
    const int sign = maya.blacks_above(m.twice()) % 2 == 0 ? 1 : -1;
    maya.set(m.twice(), false);
    return RVec::basis(maya.to_charged(), Rational(sign));
}

ROp psi(HalfInt m) {
    return {[m](const ChargedPartition& cp) { return apply_psi(m, cp); }, "psi(" + m.str() + ")"};
}

ROp psi_star(HalfInt m) {
    return {[m](const ChargedPartition& cp) { return apply_psi_star(m, cp); }, "psis(" + m.str() + ")"};
}

std::optional<RelationFailure> anticommutator_check(HalfInt m, HalfInt n, const std::vector<ChargedPartition>& states) {
    const auto pm = psi(m), pn = psi(n), sm = psi_star(m), sn = psi_star(n);
    const auto cc = anticommutator(pm, pn);
    const auto aa = anticommutator(sm, sn);
    const auto ca = anticommutator(pn, sm);
    for (const auto& cp : states) {
        if (auto v = cc(cp); !v.is_zero()) return RelationFailure{"{psi_m, psi_n} = 0", cp, v, {}};
        if (auto v = aa(cp); !v.is_zero()) return RelationFailure{"{psi*_m, psi*_n} = 0", cp, v, {}};
        RVec expected = m == n ? RVec::basis(cp) : RVec{};
        if (auto v = ca(cp); !(v == expected))
            return RelationFailure{"{psi_n, psi*_m} = delta_{m,n}", cp, v, expected};
    }
    return std::nullopt;
}

RVec bilinear_sum(std::span<const BilinearTerm> terms, const ChargedPartition& cp) {
    RVec out;
    for (const auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        RVec v = t.order == BilinearTerm::Order::creation_first ? psi(t.m)(apply_psi_star(t.n, cp))
                                                                  : psi_star(t.n)(apply_psi(t.m, cp));
        out.add(v, t.coeff);
    }
    return out;
}

RVec normal_ordered_charge(const ChargedPartition& cp) {
    const Maya maya(cp);
    std::vector<BilinearTerm> terms;
    // Below the lowest white and above max(highest black, 0) every term vanishes.
    const int top = std::max(maya.highest_black(), -1) + 2;
    for (int p = maya.lowest() - 2; p <= top; p += 2) {
        const HalfInt m = HalfInt::from_twice(p);
        if (p > 0)
            terms.push_back({Rational(1), m, m, BilinearTerm::Order::creation_first});
        else
            terms.push_back({Rational(-1), m, m, BilinearTerm::Order::annihilation_first});
    }
    return bilinear_sum(terms, cp);
}

}  // namespace focklab
