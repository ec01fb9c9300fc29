#include "focklab/boson.hpp"

#include <cstdlib>
#include <stdexcept>

namespace focklab {

RVec apply_alpha(int k, const ChargedPartition& cp) {
    if (k == 0) throw std::invalid_argument("alpha(0) is the charge operator a0");
    const Maya base(cp);
    RVec out;
    const int step = 2 * k;
    // A bead at p with p - k white; below `lowest` every slot is black, so
    // the landing slot is at or above it.
    const int top = base.highest_black();
    for (int p = base.lowest() - 2 * std::abs(k); p <= top; p += 2) {
        if (!base.black(p) || base.black(p - step)) continue;
        const int sign = base.blacks_between(p - step, p) % 2 == 0 ? 1 : -1;
        Maya moved = base;
        moved.set(p, false);
        moved.set(p - step, true);
        out.add(moved.to_charged(), Rational(sign));
    }
    return out;
}

ROp alpha(int k) {
    return {[k](const ChargedPartition& cp) { return apply_alpha(k, cp); }, "alpha(" + std::to_string(k) + ")"};
}

ROp alpha0() {
    return {[](const ChargedPartition& cp) { return RVec::basis(cp, Rational(cp.charge)); }, "a0"};
}

ROp shift(int k) {
    std::string name = k == 1 ? "s" : (k == -1 ? "s^-1" : "s^" + std::to_string(k));
    return {[k](const ChargedPartition& cp) { return RVec::basis({cp.lambda, cp.charge + k}); }, std::move(name)};
}

RVec alpha_via_clifford(int k, const ChargedPartition& cp) {
    if (k == 0) throw std::invalid_argument("alpha(0) is the charge operator a0");
    const Maya maya(cp);
    // psi*_{m+k} needs a bead at m+k (so m+k <= highest black) and psi_m a
    // hole at m (so m >= lowest tracked slot).
    std::vector<BilinearTerm> terms;
    const int lo = maya.lowest();
    const int hi = maya.highest_black() - 2 * k;
    for (int p = lo; p <= hi; p += 2) {
        const HalfInt m = HalfInt::from_twice(p);
        terms.push_back({Rational(1), m, m + k});
    }
    return bilinear_sum(terms, cp);
}

ROp alpha_clifford(int k) {
    return {[k](const ChargedPartition& cp) { return alpha_via_clifford(k, cp); },
            "sum psi psi*(" + std::to_string(k) + ")"};
}

}  // namespace focklab
