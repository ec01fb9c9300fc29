#include "focklab/laurent.hpp"

#include <stdexcept>

namespace focklab {

LaurentQ LaurentQ::monomial(int exponent, const Rational& coeff) {
    LaurentQ p;
    p.add_term(exponent, coeff);
    return p;
}

void LaurentQ::add_term(int e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational LaurentQ::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentQ::min_degree() const {
    if (terms_.empty()) throw std::domain_error("LaurentQ: degree of zero");
    return terms_.begin()->first;
}

int LaurentQ::max_degree() const {
    if (terms_.empty()) throw std::domain_error("LaurentQ: degree of zero");
    return terms_.rbegin()->first;
}

Rational LaurentQ::at_one() const {
    Rational s;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentQ LaurentQ::divide_exact(const LaurentQ& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("LaurentQ: division by zero");
    LaurentQ rem = *this;
    LaurentQ quot;
    const int dlead = divisor.max_degree();
    const int dlow = divisor.min_degree();
    const Rational lead = divisor.terms_.rbegin()->second;
    // Long division from the top degree; the remainder must vanish before its
    // span drops below the divisor's span.
    while (!rem.is_zero()) {
        if (rem.max_degree() - rem.min_degree() < dlead - dlow)
            throw std::domain_error("LaurentQ: not exactly divisible");
        const int e = rem.max_degree() - dlead;
        const Rational c = rem.terms_.rbegin()->second / lead;
        quot.add_term(e, c);
        rem -= monomial(e, c) * divisor;
    }
    return quot;
}

std::string LaurentQ::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (e == 0) {
            out += mag.str();
            continue;
        }
        if (!unit) out += mag.str() + "*";
        out += "q";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

LaurentQ LaurentQ::operator-() const {
    LaurentQ r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) {
    LaurentQ r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    terms_ = std::move(r.terms_);
    return *this;
}

}  // namespace focklab
