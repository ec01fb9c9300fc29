#include "focklab/qfock.hpp"

#include <algorithm>
#include <stdexcept>

namespace focklab {

namespace {

void check_index(int i, int level) {
    if (level < 2) throw std::invalid_argument("level must be at least 2");
    if (i < 0 || i >= level) throw std::invalid_argument("generator index out of range");
}

}  // namespace

QCounts n_counts(const ChargedPartition& cp, int level, int i, BoxCoord box, Orientation o) {
    check_index(i, level);
    const auto addable = addable_boxes(cp, Color{i}, level);
    const auto removable = removable_boxes(cp, Color{i}, level);
    const bool known = std::find(addable.begin(), addable.end(), box) != addable.end() ||
                       std::find(removable.begin(), removable.end(), box) != removable.end();
    if (!known) throw std::invalid_argument("box is neither addable nor removable with that color");

    const int sign = o == Orientation::larger_content_left ? 1 : -1;
    auto left = [&](const BoxCoord& b) { return sign * (b.content() - box.content()) > 0; };
    auto right = [&](const BoxCoord& b) { return sign * (b.content() - box.content()) < 0; };
    QCounts n;
    for (const auto& b : addable) n.na += left(b), n.nr += right(b);
    for (const auto& b : removable) n.na -= left(b), n.nr -= right(b);
    return n;
}

QVec apply_Eq(int i, int level, const ChargedPartition& cp, Orientation o) {
    check_index(i, level);
    QVec out;
    for (const auto& box : removable_boxes(cp, Color{i}, level))
        out.add({remove_box(cp.lambda, box), cp.charge}, LaurentQ::monomial(-n_counts(cp, level, i, box, o).nr));
    return out;
}

QVec apply_Fq(int i, int level, const ChargedPartition& cp, Orientation o) {
    check_index(i, level);
    QVec out;
    for (const auto& box : addable_boxes(cp, Color{i}, level))
        out.add({add_box(cp.lambda, box), cp.charge}, LaurentQ::monomial(n_counts(cp, level, i, box, o).na));
    return out;
}

QVec apply_Kq(int i, int level, const ChargedPartition& cp, int power) {
    check_index(i, level);
    const int weight = static_cast<int>(addable_boxes(cp, Color{i}, level).size()) -
                       static_cast<int>(removable_boxes(cp, Color{i}, level).size());
    return QVec::basis(cp, LaurentQ::monomial(power * weight));
}

QOp eq_op(int i, int level, Orientation o) {
    return {[=](const ChargedPartition& cp) { return apply_Eq(i, level, cp, o); }, "Eq(" + std::to_string(i) + ")"};
}

QOp fq_op(int i, int level, Orientation o) {
    return {[=](const ChargedPartition& cp) { return apply_Fq(i, level, cp, o); }, "Fq(" + std::to_string(i) + ")"};
}

QOp kq_op(int i, int level, int power) {
    return {[=](const ChargedPartition& cp) { return apply_Kq(i, level, cp, power); },
            power == 1 ? "K(" + std::to_string(i) + ")" : "K(" + std::to_string(i) + ")^" + std::to_string(power)};
}

RVec specialize_q1(const QVec& v) {
    RVec out;
    for (const auto& [cp, c] : v.terms()) out.add(cp, c.at_one());
    return out;
}

}  // namespace focklab
