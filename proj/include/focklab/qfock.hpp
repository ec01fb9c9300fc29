#pragma once

// The Misra-Miwa action of U_q(sl_l^) on the q-deformed Fock space.

#include "focklab/matalg.hpp"

namespace focklab {

// Which side of a box counts as "left" when comparing i-boxes. The default
// reads boxes of larger content as lying to the left.
enum class Orientation { larger_content_left, smaller_content_left };

struct QCounts {
    int na = 0;  // addable minus removable i-boxes to the left of the box
    int nr = 0;  // addable minus removable i-boxes to the right of the box
    friend bool operator==(const QCounts&, const QCounts&) = default;
};

// The box must be addable or removable for cp and have color i; the counts
// are taken over the addable and removable i-boxes of cp itself.
QCounts n_counts(const ChargedPartition& cp, int level, int i, BoxCoord box,
                 Orientation o = Orientation::larger_content_left);

QVec apply_Eq(int i, int level, const ChargedPartition& cp, Orientation o = Orientation::larger_content_left);
QVec apply_Fq(int i, int level, const ChargedPartition& cp, Orientation o = Orientation::larger_content_left);
// K_i^power = q^(power * (#addable i-boxes - #removable i-boxes)).
QVec apply_Kq(int i, int level, const ChargedPartition& cp, int power = 1);

QOp eq_op(int i, int level, Orientation o = Orientation::larger_content_left);
QOp fq_op(int i, int level, Orientation o = Orientation::larger_content_left);
QOp kq_op(int i, int level, int power = 1);

RVec specialize_q1(const QVec& v);

}  // namespace focklab
