#pragma once

#include <map>
#include <ostream>
#include <string>

#include "focklab/rational.hpp"

namespace focklab {

// Laurent polynomial in q with rational coefficients. Sparse; zero
// coefficients are never stored.
class LaurentQ {
public:
    using Terms = std::map<int, Rational>;

    LaurentQ() = default;
    LaurentQ(const Rational& c) { if (!c.is_zero()) terms_.emplace(0, c); }  // NOLINT
    LaurentQ(long c) : LaurentQ(Rational(c)) {}                               // NOLINT
    LaurentQ(int c) : LaurentQ(Rational(c)) {}                                // NOLINT

    static LaurentQ monomial(int exponent, const Rational& coeff = Rational(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int exponent) const;
    int min_degree() const;   // requires !is_zero()
    int max_degree() const;

    Rational at_one() const;

    // Exact quotient; throws std::domain_error if the divisor does not divide.
    LaurentQ divide_exact(const LaurentQ& divisor) const;

    std::string str() const;

    LaurentQ operator-() const;
    LaurentQ& operator+=(const LaurentQ& o);
    LaurentQ& operator-=(const LaurentQ& o);
    LaurentQ& operator*=(const LaurentQ& o);

    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
    friend LaurentQ operator*(LaurentQ a, const LaurentQ& b) { return a *= b; }
    friend bool operator==(const LaurentQ& a, const LaurentQ& b) { return a.terms_ == b.terms_; }

    friend std::ostream& operator<<(std::ostream& os, const LaurentQ& p) { return os << p.str(); }

private:
    void add_term(int e, const Rational& c);
    Terms terms_;
};

inline bool is_zero(const LaurentQ& p) { return p.is_zero(); }

}  // namespace focklab
