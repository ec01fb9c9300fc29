#include "focklab/fockvec.hpp"

#include <algorithm>

namespace focklab {

bool canonical_less(const ChargedPartition& a, const ChargedPartition& b) {
    const int sa = a.lambda.size();
    const int sb = b.lambda.size();
    if (sa != sb) return sa > sb;
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return a.charge < b.charge;
}

namespace {

template <class R>
std::string render(const FockVector<R>& v, auto coeff_text) {
    if (v.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [cp, c] : canonical_terms(v)) {
        std::string text = coeff_text(c);
        if (!first) {
            const bool neg = !text.empty() && text[0] == '-';
            out += neg ? " - " : " + ";
            if (neg) text.erase(0, 1);
        }
        first = false;
        out += text + "|" + cp.str() + ">";
    }
    return out;
}

}  // namespace

std::string to_string(const RVec& v) {
    return render(v, [](const Rational& c) -> std::string {
        if (c == Rational(1)) return "";
        if (c == Rational(-1)) return "-";
        return c.str() + "*";
    });
}

std::string to_string(const QVec& v) {
    return render(v, [](const LaurentQ& c) -> std::string {
        if (c == LaurentQ(1)) return "";
        return "(" + c.str() + ")*";
    });
}

QVec lift(const RVec& v) {
    QVec out;
    for (const auto& [cp, c] : v.terms()) out.add(cp, LaurentQ(c));
    return out;
}

}  // namespace focklab
