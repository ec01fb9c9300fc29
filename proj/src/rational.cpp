#include "focklab/rational.hpp"

#include <stdexcept>

namespace focklab {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool valid_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

mpz_class to_mpz(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!valid_integer(num)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return Rational(mpq_class(to_mpz(num)));
    const auto den = text.substr(slash + 1);
    if (!valid_integer(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class d = to_mpz(den);
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    return Rational(mpq_class(to_mpz(num), d));
}

std::string Rational::str() const { return v_.get_str(10); }

std::string Rational::fraction_str() const {
    return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

}  // namespace focklab
